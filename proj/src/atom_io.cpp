#include "cpvdw/atom_io.hpp"
#include "cpvdw/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace cpvdw::response {

namespace {

class Reader {
public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Mark &mark, const std::string &msg) const {
    std::ostringstream s;
    s << source_;
    if (!mark.is_null())
      s << ':' << mark.line + 1 << ':' << mark.column + 1;
    s << ": " << msg;
    throw ConfigError(s.str());
  }

  void only_keys(const YAML::Node &map, const std::set<std::string> &allowed,
                 const std::string &where) const {
    for (const auto &kv : map) {
      const auto key = kv.first.as<std::string>();
      if (!allowed.count(key)) {
        std::string hint;
        if (key.find("tensor") != std::string::npos ||
            key.find("vec") != std::string::npos)
          hint = " (only isotropic atoms are supported)";
        fail(kv.first.Mark(), "unknown key '" + key + "' in " + where + hint);
      }
    }
  }

  double number(const YAML::Node &map, const std::string &key,
                const std::string &where) const {
    const auto node = map[key];
    if (!node)
      fail(map.Mark(), "missing '" + key + "' in " + where);
    if (!node.IsScalar())
      fail(node.Mark(), "'" + key + "' must be a number");
    try {
      return node.as<double>();
    } catch (const YAML::Exception &) {
      fail(node.Mark(), "'" + key + "' must be a number, got '" +
                            node.Scalar() + "'");
    }
  }

  std::vector<Transition> transitions(const YAML::Node &root,
                                      const std::string &key,
                                      const std::string &dipole_key,
                                      TransitionKind kind) const {
    std::vector<Transition> out;
    const auto list = root[key];
    if (!list || list.IsNull())
      return out;
    if (!list.IsSequence())
      fail(list.Mark(), "'" + key + "' must be a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto item = list[i];
      const auto where = key + "[" + std::to_string(i) + "]";
      if (!item.IsMap())
        fail(item.Mark(), where + " must be a mapping {omega, " + dipole_key +
                              "}");
      only_keys(item, {"omega", dipole_key}, where);
      Transition t{number(item, "omega", where),
                   number(item, dipole_key, where), kind};
      if (!(t.omega_k > 0.0))
        fail(item["omega"].Mark(), where + ": omega must be > 0");
      if (!(t.dipole_sq >= 0.0))
        fail(item[dipole_key].Mark(), where + ": " + dipole_key +
                                          " must be >= 0");
      out.push_back(t);
    }
    return out;
  }

  DiamagneticSpec diamagnetic(const YAML::Node &root) const {
    DiamagneticSpec spec;
    const auto direct = root["beta_d"];
    const auto particles = root["particles"];
    if (direct && particles)
      fail(particles.Mark(),
           "both 'beta_d' and 'particles' given; specify exactly one");
    if (direct) {
      const double b = number(root, "beta_d", "atom");
      if (b > 0.0)
        fail(direct.Mark(), "beta_d must be <= 0 (Lenz rule), got " +
                                direct.Scalar());
      spec.direct_beta_d = b;
    }
    if (particles && !particles.IsNull()) {
      if (!particles.IsSequence())
        fail(particles.Mark(), "'particles' must be a list");
      for (std::size_t i = 0; i < particles.size(); ++i) {
        const auto item = particles[i];
        const auto where = "particles[" + std::to_string(i) + "]";
        if (!item.IsMap())
          fail(item.Mark(), where + " must be a mapping {q, m, r_sq}");
        only_keys(item, {"q", "m", "r_sq"}, where);
        Particle p{number(item, "q", where), number(item, "m", where),
                   number(item, "r_sq", where)};
        if (!(p.mass > 0.0))
          fail(item["m"].Mark(), where + ": mass must be > 0");
        if (!(p.mean_sq_radius >= 0.0))
          fail(item["r_sq"].Mark(), where + ": r_sq must be >= 0");
        spec.particles.push_back(p);
      }
    }
    return spec;
  }

private:
  std::string source_;
};

} // namespace

AtomModel parse_atom(const std::string &text, const std::string &source) {
  Reader reader(source);
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException &e) {
    reader.fail(e.mark, "syntax error: " + e.msg);
  }
  if (!root.IsMap())
    reader.fail(root.Mark(), "atom definition must be a mapping");
  reader.only_keys(root,
                   {"label", "electric_transitions", "magnetic_transitions",
                    "beta_d", "particles"},
                   "atom");
  std::string label = source;
  if (const auto node = root["label"]) {
    if (!node.IsScalar())
      reader.fail(node.Mark(), "'label' must be text");
    label = node.Scalar();
  }
  auto electric = reader.transitions(root, "electric_transitions", "mu_sq",
                                     TransitionKind::electric);
  auto magnetic = reader.transitions(root, "magnetic_transitions", "m_sq",
                                     TransitionKind::magnetic);
  auto dia = reader.diamagnetic(root);
  try {
    return make_atom(std::move(label), std::move(electric), std::move(magnetic),
                     std::move(dia));
  } catch (const std::exception &e) {
    reader.fail(root.Mark(), e.what());
  }
}

AtomModel load_atom_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open atom file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_atom(buffer.str(), path.string());
}

} // namespace cpvdw::response

#pragma once

#include "cpvdw/green.hpp"
#include "cpvdw/quad.hpp"
#include "cpvdw/response.hpp"
#include "cpvdw/units.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cpvdw::potentials {

using green::PlateKind;
using response::AtomModel;

//! Which part of an atom's response enters a channel.
enum class Response { electric, paramagnetic, diamagnetic };

char symbol(Response r); // 'e', 'p', 'd'

//! Mirror channel: `b` empty. Pair channel: response `a` of atom A couples
//! to response `b` of atom B.
struct Channel {
  Response a;
  std::optional<Response> b;

  bool operator==(const Channel &) const = default;
};

std::string name(const Channel &channel);
//! Parses "e", "p", "d" or two-letter pair names such as "ed".
Channel parse_channel(const std::string &text);

//! e, p, d.
const std::array<Channel, 3> &mirror_channels();
//! ee, ep, ed, pe, pp, pd, de, dp, dd (row = atom A).
const std::array<Channel, 9> &pair_channels();
std::size_t pair_index(Response a, Response b);

//! Physical constants plus the quadrature controls shared by every
//! evaluation.
struct EvalContext {
  units::Constants constants;
  quad::QuadratureSpec quadrature;
  units::UnitSystem system = units::UnitSystem::SI;
};

EvalContext make_context(units::UnitSystem system, double rel_tol = 1e-10);

struct MirrorValues {
  double electric = 0.0;
  double paramagnetic = 0.0;
  double diamagnetic = 0.0;
  double magnetic = 0.0; //!< paramagnetic + diamagnetic
  double total = 0.0;    //!< electric + magnetic

  double channel(Response r) const;
};

//! Casimir-Polder potential of `atom` at distance z above a perfect mirror,
//! every channel by quadrature over the imaginary frequency axis.
MirrorValues cp_mirror(const AtomModel &atom, double z, PlateKind plate,
                       const EvalContext &ctx);

//! +-3 hbar mu0 c beta_d / (32 pi^2 z^4), upper sign conducting.
double cp_mirror_diamagnetic_closed(double beta_d, double z, PlateKind plate,
                                    const units::Constants &k);

struct PairValues {
  std::array<double, 9> channels{}; //!< indexed as pair_channels()
  double total = 0.0;

  double channel(Response a, Response b) const {
    return channels[pair_index(a, b)];
  }
};

//! Free-space van der Waals potential of atoms A and B at separation l,
//! split into the nine response channels.
PairValues vdw_pair(const AtomModel &atom_a, const AtomModel &atom_b, double l,
                    const EvalContext &ctx);

//! Same total evaluated in one pass with alpha and the total beta of each
//! atom, without the channel split.
double vdw_free_full(const AtomModel &atom_a, const AtomModel &atom_b,
                     double l, const EvalContext &ctx);

//! -23 hbar mu0^2 c beta_A beta_B / (64 pi^3 l^7), valid at every l.
double vdw_dd_closed(double beta_a, double beta_b, double l,
                     const units::Constants &k);

enum class Regime { nonretarded, retarded };

std::string_view to_string(Regime regime);

//! Closed-form asymptote of one pair channel. Supported: every channel
//! with a diamagnetic side in both regimes (dd is range independent), and
//! ee, pp, ep, pe in the retarded regime via the static responses.
//! Throws UnsupportedError otherwise.
double vdw_asymptote(const Channel &channel, const AtomModel &atom_a,
                     const AtomModel &atom_b, double l, Regime regime,
                     const units::Constants &k);

//! Deep-regime thresholds: nonretarded l omega_max / c <= 1e-3,
//! retarded l omega_min / c >= 1e3.
inline constexpr double deep_regime_depth = 1e3;

//! True if l lies in the deep regime with respect to `omegas`
//! (frequencies that set the retardation scale). Empty set: always true.
bool in_deep_regime(const std::vector<double> &omegas, double l, double c,
                    Regime regime);

//! Transition frequencies of the responses that enter `channel`.
std::vector<double> channel_frequencies(const Channel &channel,
                                        const AtomModel &atom_a,
                                        const AtomModel *atom_b);

} // namespace cpvdw::potentials

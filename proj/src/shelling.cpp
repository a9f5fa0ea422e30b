#include "cgx/shelling.hpp"

namespace cgx {

namespace {

Rational power_of(std::size_t base, std::size_t exponent) {
  mpz_class b(static_cast<unsigned long>(base));
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(power);
}

ShellingEmbedding build(const OrderingFamily& f, const Rational& scale) {
  const std::size_t m = f.m();
  PointMap points(f.n(), RationalPoint(std::vector<Rational>(m)));
  for (std::size_t i = 0; i < m; ++i) {
    for (ElementId x = 0; x < f.n(); ++x) points[x][i] = -power_of(m + 1, f.orders()[i].rank(x));
  }

  std::vector<RationalPoint> q{RationalPoint(std::vector<Rational>(m, Rational(0)))};
  if (sgn(scale) > 0) {
    for (std::size_t i = 0; i < m; ++i) {
      RationalPoint corner(std::vector<Rational>(m, Rational(0)));
      corner[i] = scale;
      q.push_back(std::move(corner));
    }
  }

  ShellingInstance instance(f.ground(), std::move(points), std::move(q));
  return ShellingEmbedding{f, scale, std::move(instance)};
}

}  // namespace

Rational default_lambda(std::size_t m) { return power_of(m + 1, m + 1); }

Rational sufficient_lambda(std::size_t m, std::size_t n) {
  // On a line Hull(P + Q) is [min P, lambda], so any positive lambda works.
  if (m == 1) return default_lambda(1);
  return Rational(static_cast<unsigned long>(m)) * power_of(m + 1, 2 * n);
}

ShellingEmbedding embed_shelling(const OrderingFamily& f, std::optional<Rational> lambda, std::size_t limit) {
  const std::size_t m = f.m();
  if (lambda) {
    if (sgn(*lambda) < 0 || (sgn(*lambda) == 0 && m != 1)) {
      throw InvalidInput("lambda must be positive (zero is admitted only for a single ordering)");
    }
    return build(f, *lambda);
  }

  if (f.n() <= limit) {
    ShellingEmbedding e = build(f, default_lambda(m));
    if (verify_roundtrip(e, generate(f)).pass) return e;
  }
  ShellingEmbedding e = build(f, sufficient_lambda(m, f.n()));
  e.lambda_raised = true;
  if (f.n() <= limit && !verify_roundtrip(e, generate(f)).pass) {
    throw InternalError("shelling embedding with the sufficient lambda failed verification");
  }
  return e;
}

VerificationReport verify_shelling(const ShellingInstance& inst, const ConvexGeometry& g) {
  const ConvexGeometry realized = relabel(shelling_geometry(inst), g.ground());
  if (auto diff = first_difference(realized, g)) {
    const bool in_shelling = realized.contains(*diff);
    return VerificationReport::failure(
        *diff, g.ground().format(*diff) + (in_shelling ? " is convex in the shelling but not in the target"
                                                       : " is convex in the target but not in the shelling"));
  }
  return VerificationReport::ok();
}

VerificationReport verify_roundtrip(const ShellingEmbedding& e, const ConvexGeometry& g) {
  return verify_shelling(e.instance, g);
}

VerificationReport verify_pos_equals_ext_hull(const ShellingEmbedding& e) {
  const std::size_t n = e.family.n();
  require_within_limit(n, kMaxEnumerable, "Pos/ExtHull sweep");
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const Subset p(bits);
    const Subset pos = pos_hull_members(p, e.points());
    const Subset ext = ext_hull_members(p, e.points());
    if (pos != ext) {
      const auto& gs = e.family.ground();
      return VerificationReport::failure(p, "P = " + gs.format(p) + ": Pos gives " + gs.format(pos) +
                                                ", ExtHull gives " + gs.format(ext));
    }
  }
  return VerificationReport::ok();
}

VerificationReport verify_hull_equals_ext_hull(const ShellingEmbedding& e) {
  const std::size_t n = e.family.n();
  require_within_limit(n, kMaxEnumerable, "Hull/ExtHull sweep");
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const Subset p(bits);
    const Subset hull = e.instance.hull_trace(p);
    const Subset ext = ext_hull_members(p, e.points());
    if (hull != ext) {
      const auto& gs = e.family.ground();
      return VerificationReport::failure(p, "P = " + gs.format(p) + ": Hull(P + Q) gives " + gs.format(hull) +
                                                ", ExtHull gives " + gs.format(ext));
    }
  }
  return VerificationReport::ok();
}

}  // namespace cgx

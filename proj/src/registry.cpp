#include <pbundle/errors.hpp>
#include <pbundle/poly.hpp>
#include <pbundle/registry.hpp>

#include <sstream>

namespace pbundle {

BundleExpr BundleExpr::trivial(int k) {
  if (k < 1) throw InvalidInput("trivial: rank must be positive");
  return BundleExpr(Kind::trivial, k);
}
BundleExpr BundleExpr::line(const Integer& degree) { return BundleExpr(Kind::line, degree); }
BundleExpr BundleExpr::tangent_twist() { return BundleExpr(Kind::tangent_twist, 0); }
BundleExpr BundleExpr::p_of_line(int b) {
  if (b < 1) throw InvalidInput("p_of_line: b must be positive");
  return BundleExpr(Kind::p_of_line, b);
}
BundleExpr BundleExpr::omega_two() { return BundleExpr(Kind::omega_two, 0); }
BundleExpr BundleExpr::wedge2_tangent_twist() { return BundleExpr(Kind::wedge2_tangent_twist, 0); }

BundleExpr BundleExpr::direct_sum(std::vector<BundleExpr> parts) {
  if (parts.empty()) throw InvalidInput("direct_sum: no summands");
  BundleExpr out(Kind::direct_sum, 0);
  out.children_ = std::move(parts);
  return out;
}

BundleExpr BundleExpr::quotient_by_trivial(BundleExpr inner, int k) {
  if (k < 0) throw InvalidInput("quotient_by_trivial: k must be nonnegative");
  BundleExpr out(Kind::quotient_by_trivial, k);
  out.children_.push_back(std::move(inner));
  return out;
}

int BundleExpr::rank(int n) const {
  switch (kind_) {
    case Kind::trivial:
      return static_cast<int>(param_.get_si());
    case Kind::line:
      return 1;
    case Kind::tangent_twist:
    case Kind::omega_two:
      return n;
    case Kind::p_of_line:
      return static_cast<int>(binomial(n + param_.get_si(), n).get_si()) - 1;
    case Kind::wedge2_tangent_twist:
      return n * (n - 1) / 2;
    case Kind::direct_sum: {
      int total = 0;
      for (const auto& c : children_) total += c.rank(n);
      return total;
    }
    case Kind::quotient_by_trivial: {
      const int inner = children_.front().rank(n);
      const int k = static_cast<int>(param_.get_si());
      if (k >= inner) {
        throw RankUnderflow("quotient_by_trivial: cannot quotient a rank " + std::to_string(inner) + " bundle by O^" + std::to_string(k));
      }
      return inner - k;
    }
  }
  return 0;
}

std::string BundleExpr::to_string() const {
  switch (kind_) {
    case Kind::trivial:
      return "O^" + param_.get_str();
    case Kind::line:
      return "O(" + param_.get_str() + ")";
    case Kind::tangent_twist:
      return "T(-1)";
    case Kind::p_of_line:
      return "P_O(" + param_.get_str() + ")";
    case Kind::omega_two:
      return "Omega(2)";
    case Kind::wedge2_tangent_twist:
      return "wedge2(T(-1))";
    case Kind::direct_sum: {
      std::string s;
      for (std::size_t i = 0; i < children_.size(); ++i) s += (i ? " + " : "") + children_[i].to_string();
      return "(" + s + ")";
    }
    case Kind::quotient_by_trivial:
      return children_.front().to_string() + " / O^" + param_.get_str();
  }
  return "?";
}

namespace {

IntPolynomial total_class(const BundleExpr& e, const std::vector<BundleExpr>& children, const Integer& param, int n) {
  const auto order = static_cast<std::size_t>(n);
  switch (e.kind()) {
    case BundleExpr::Kind::trivial:
      return IntPolynomial::constant(1);
    case BundleExpr::Kind::line:
      return IntPolynomial(std::vector<Integer>{1, param}).truncated(order);
    case BundleExpr::Kind::tangent_twist:
      return series_inverse(IntPolynomial{1, -1}, order);
    case BundleExpr::Kind::p_of_line:
      return series_inverse(IntPolynomial(std::vector<Integer>{1, -param}), order);
    case BundleExpr::Kind::omega_two:
      return mul_truncated(poly_pow(IntPolynomial{1, 1}, static_cast<unsigned>(n + 1)), series_inverse(IntPolynomial{1, 2}, order), order);
    case BundleExpr::Kind::wedge2_tangent_twist: {
      const ChernData t = ChernData::from_total(n, n, series_inverse(IntPolynomial{1, -1}, order));
      return wedge2_chern(t, n).total();
    }
    case BundleExpr::Kind::direct_sum: {
      IntPolynomial acc = IntPolynomial::constant(1);
      for (const auto& c : children) acc = mul_truncated(acc, chern_of(c, n).total(), order);
      return acc;
    }
    case BundleExpr::Kind::quotient_by_trivial:
      return chern_of(children.front(), n).total();
  }
  return {};
}

}  // namespace

ChernData chern_of(const BundleExpr& expr, int n) {
  const int rank = expr.rank(n);
  if (rank < 1) throw RankUnderflow("chern_of: bundle " + expr.to_string() + " has rank " + std::to_string(rank) + " on P^" + std::to_string(n));
  return ChernData::from_total(n, rank, total_class(expr, expr.children_, expr.param_, n));
}

ChernData wedge2_chern(const ChernData& c, int rank) {
  if (rank < 2) throw InvalidInput("wedge2_chern: rank must be at least 2");
  const int n = c.n();
  // Power sums p_k of the Chern roots by Newton's identities.
  std::vector<Rational> p(static_cast<std::size_t>(n) + 1);
  p[0] = rank;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i < k; ++i) acc += Rational(sign_power(i - 1) * c[i]) * p[static_cast<std::size_t>(k - i)];
    acc += Rational(sign_power(k - 1) * k * c[k]);
    p[static_cast<std::size_t>(k)] = acc;
  }
  std::vector<Rational> ch(p.size());
  Integer fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    ch[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)] / Rational(fact);
  }
  // ch(wedge2 G) = (ch(G)^2 - psi^2 ch(G)) / 2
  std::vector<Rational> ch2(p.size());
  for (int k = 0; k <= n; ++k) {
    Rational sq = 0;
    for (int i = 0; i <= k; ++i) sq += ch[static_cast<std::size_t>(i)] * ch[static_cast<std::size_t>(k - i)];
    ch2[static_cast<std::size_t>(k)] = (sq - Rational(ipow(2, static_cast<unsigned long>(k))) * ch[static_cast<std::size_t>(k)]) / 2;
  }
  std::vector<Rational> q(p.size());
  fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    q[static_cast<std::size_t>(k)] = ch2[static_cast<std::size_t>(k)] * Rational(fact);
  }
  // Back to elementary symmetric functions: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} q_i.
  std::vector<Rational> e(p.size());
  e[0] = 1;
  std::vector<Integer> out(p.size());
  out[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += Rational(sign_power(i - 1)) * e[static_cast<std::size_t>(k - i)] * q[static_cast<std::size_t>(i)];
    acc /= k;
    acc.canonicalize();
    if (acc.get_den() != 1) {
      throw NonIntegralResult("wedge2_chern: c_" + std::to_string(k) + " = " + acc.get_str() + " is not integral");
    }
    e[static_cast<std::size_t>(k)] = acc;
    out[static_cast<std::size_t>(k)] = acc.get_num();
  }
  return ChernData(n, rank * (rank - 1) / 2, std::move(out));
}

Integer catalan(long k) { return binomial(2 * k, k) / (k + 1); }

namespace {

ExampleRecord make_record(int id, std::string part, std::optional<int> k, std::string key, BundleExpr bundle, int n, int m,
                          const Integer& d, const Integer& tau, const Integer& alpha, const Integer& deg_w, bool y_pn,
                          bool nonlinear, std::string y_desc, std::string w_desc, std::vector<std::string> notes) {
  ExampleRecord rec;
  rec.example_id = id;
  rec.part = std::move(part);
  rec.k = k;
  rec.key = std::move(key);
  rec.y_description = std::move(y_desc);
  rec.w_description = std::move(w_desc);
  rec.params.chern = chern_of(bundle, n);
  rec.bundle = std::move(bundle);
  rec.params.n = n;
  rec.params.r = rec.params.chern.rank() - 1;
  rec.params.m = m;
  rec.params.d = d;
  rec.params.a = 1;
  rec.params.b = 0;
  rec.params.tau = tau;
  rec.params.alpha = alpha;
  rec.params.deg_w = deg_w;
  rec.params.flags = SetupFlags{y_pn, nonlinear, true};
  rec.notes = std::move(notes);
  return rec;
}

std::string key_of(const std::string& stem, const std::string& suffix) { return stem + ":" + suffix; }

}  // namespace

std::vector<ExampleRecord> catalog(int max_n) {
  if (max_n < 4) throw InvalidInput("catalog: max_n must be at least 4");
  std::vector<ExampleRecord> out;
  using B = BundleExpr;

  for (int n = 1; n <= max_n; ++n) {
    for (int mx = 1; mx <= max_n; ++mx) {
      const int r = mx;
      out.push_back(make_record(0, "", mx, key_of("ex0", "n=" + std::to_string(n) + ",k=" + std::to_string(mx)),
                                B::direct_sum({B::trivial(mx), B::line(1)}), n, mx - 1, 1, n + r + 1, 1, 1, true, false,
                                "P^" + std::to_string(n + r), "linear P^" + std::to_string(mx - 1),
                                {"blow-up of P^{n+k} along a linear subvariety of dimension k-1"}));
    }
  }

  for (int k = 0; k <= 2; ++k) {
    out.push_back(make_record(1, "", k, key_of("ex1", "k=" + std::to_string(k)),
                              B::quotient_by_trivial(B::direct_sum({B::tangent_twist(), B::tangent_twist()}), k), 2, 3 - k, 2, 6 - k,
                              1, 3, true, true, "P^" + std::to_string(5 - k), "linear section of the Segre P^1 x P^2 in P^5",
                              {"center has degree 3"}));
  }

  for (int k = 0; k <= 3; ++k) {
    std::vector<std::string> notes{"center is a linear section of Gr(2,5) in its Pluecker embedding, degree 5"};
    if (k == 3) notes.emplace_back("Tango bundle on P^4");
    out.push_back(make_record(2, "", k, key_of("ex2", "k=" + std::to_string(k)), B::quotient_by_trivial(B::wedge2_tangent_twist(), k),
                              4, 6 - k, 2, 10 - k, 1, 5, true, true, "P^" + std::to_string(9 - k), "linear section of Gr(2,5)",
                              std::move(notes)));
  }

  out.push_back(make_record(3, "", 6, key_of("ex3", "k=6"),
                            B::quotient_by_trivial(B::direct_sum({B::tangent_twist(), B::tangent_twist(), B::tangent_twist()}), 6), 3, 3,
                            3, 6, 1, 6, true, true, "P^5", "Bordiga 3-fold",
                            {"Bordiga 3-fold center, degree 6", "codimension-6 linear section of the 3x4 rank <= 2 locus"}));

  for (int n = 2; n <= max_n; ++n) {
    const std::string ns = "n=" + std::to_string(n);
    out.push_back(make_record(4, "i", std::nullopt, key_of("ex4i", ns), B::direct_sum({B::line(1), B::tangent_twist()}), n, n, 1, 2 * n,
                              2, 1, false, false, "smooth quadric of dimension " + std::to_string(2 * n),
                              "linear P^" + std::to_string(n), {"linear center in a quadric"}));
    out.push_back(make_record(4, "ii", std::nullopt, key_of("ex4ii", ns),
                              B::quotient_by_trivial(B::direct_sum({B::line(1), B::tangent_twist()}), 1), n, n - 1, 1, 2 * n - 1, 2, 1,
                              false, false, "smooth quadric of dimension " + std::to_string(2 * n - 1),
                              "linear P^" + std::to_string(n - 1), {"linear center in a quadric"}));
  }

  for (int n = 3; n <= max_n; ++n) {
    const std::string ns = "n=" + std::to_string(n);
    const std::string grs = "Gr(2," + std::to_string(n + 2) + ")";
    const std::string grw = "Gr(2," + std::to_string(n + 1) + ")";
    std::vector<std::string> notes{"alpha and deg_W are Pluecker degrees of Grassmannians (Catalan numbers)"};
    out.push_back(make_record(5, "i", std::nullopt, key_of("ex5i", ns), B::direct_sum({B::line(1), B::omega_two()}), n, 2 * n - 2, 1, n + 2,
                              catalan(n), catalan(n - 1), false, true, grs, grw, notes));
    notes.emplace_back("the subbundle is the trivial line bundle spanned by a nowhere vanishing section");
    out.push_back(make_record(5, "ii", std::nullopt, key_of("ex5ii", ns),
                              B::quotient_by_trivial(B::direct_sum({B::line(1), B::omega_two()}), 1), n, 2 * n - 3, 1, n + 1, catalan(n),
                              catalan(n - 1), false, true, "hyperplane section of " + grs, "hyperplane section of " + grw, notes));
  }
  return out;
}

std::vector<std::pair<ExampleRecord, ConstraintReport>> verify_example(int id, std::optional<int> k, std::optional<int> n, int max_n) {
  std::vector<std::pair<ExampleRecord, ConstraintReport>> out;
  for (auto& rec : catalog(std::max(max_n, n.value_or(0)))) {
    if (rec.example_id != id) continue;
    if (k && rec.k != k) continue;
    if (n && rec.params.n != *n) continue;
    ConstraintReport rep = run_all(rec.params);
    out.emplace_back(std::move(rec), std::move(rep));
  }
  if (out.empty()) throw InvalidInput("no catalog record matches example " + std::to_string(id));
  return out;
}

}  // namespace pbundle

#include <pbundle/enumerate.hpp>
#include <pbundle/errors.hpp>
#include <pbundle/registry.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace pbundle {

std::string_view to_string(SurvivorStatus s) { return s == SurvivorStatus::witness ? "witness" : "undetermined"; }

std::string signature_key(const SetupParams& p) {
  std::ostringstream os;
  os << "n=" << p.n << ",r=" << p.r << ",d=" << p.d << ",m=" << p.m << ",a=" << p.a << ",b=" << p.b << ",tau=" << p.tau
     << ",alpha=" << p.alpha;
  return os.str();
}

void EnumerationQuery::validate() const {
  auto bad = [](const std::string& msg) { throw InvalidInput("EnumerationQuery: " + msg); };
  if (!n.empty() && n.lo < 1) bad("n range must start at 1 or above");
  if (!r.empty() && r.lo < 1) bad("r range must start at 1 or above");
  if (!d.empty() && d.lo < 1) bad("d range must start at 1 or above");
  if (alpha && !alpha->empty() && alpha->lo < 1) bad("alpha range must start at 1 or above");
  if (tau && !tau->empty() && tau->lo < 1) bad("tau range must start at 1 or above");
  if (m && !m->empty() && m->lo < 0) bad("m range must start at 0 or above");
  if (a && !a->empty() && a->lo < 1) bad("a range must start at 1 or above");
  if (!y_is_projective_space && (!alpha || !tau)) bad("alpha and tau ranges are required unless Y is projective space");
  if (budget < 1) bad("budget must be positive");
  if (segre_bound < 0) bad("segre_bound must be nonnegative");
  if (witness_budget < 1 || residue_budget < 1) bad("search budgets must be positive");
  if (threads < 1 || threads > 256) bad("threads must lie in 1..256");
  if (constraints) {
    const auto ids = constraint_ids();
    for (const auto& id : *constraints) {
      if (id != kRankResidue && std::find(ids.begin(), ids.end(), id) == ids.end()) bad("unknown constraint id '" + id + "'");
    }
  }
}

long long EnumerationQuery::tuple_count() const {
  // Saturating product so absurd ranges report as over budget instead of overflowing.
  constexpr long long cap = 1LL << 62;
  long long total = 1;
  auto mul = [&](long long k) {
    if (k == 0) {
      total = 0;
      return;
    }
    total = (total > cap / k) ? cap : total * k;
  };
  mul(n.size());
  mul(r.size());
  mul(d.size());
  if (y_is_projective_space) {
    if (alpha) mul(alpha->size());
    if (tau) mul(tau->size());
    if (m) mul(m->size());
    return total;
  }
  mul(m ? m->size() : std::max(0L, n.hi + r.hi - 1));
  mul(tau->size());
  mul(alpha->size());
  if (!nonample_only) {
    const IntRange ar = a.value_or(IntRange{2, 4});
    mul(ar.size() * std::max(1L, ar.hi) + 1);
  }
  return total;
}

namespace {

constexpr std::array<long, 10> kModuli = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27};

struct Plan {
  std::vector<std::string> selected;
  std::vector<std::string> signature_ids;
  bool rank_prefilter = false;
  bool residue_active = false;
  bool full = false;
};

Plan make_plan(const EnumerationQuery& q) {
  Plan plan;
  bool rank_residue = false;
  if (q.constraints) {
    std::set<std::string> s;
    for (const auto& id : *q.constraints) {
      if (id == kRankResidue) {
        rank_residue = true;
      } else {
        s.insert(id);
      }
    }
    plan.selected.assign(s.begin(), s.end());
  } else {
    plan.full = true;
    for (auto id : constraint_ids()) plan.selected.emplace_back(id);
  }
  auto has = [&](std::string_view id) { return std::find(plan.selected.begin(), plan.selected.end(), id) != plan.selected.end(); };
  for (auto id : {kAlphaDivisibility, kBettiHardLefschetz, kBettiNOverD, kBettiProfile, kBettiSupport, kCodimEquation, kIndexEquation,
                  kPnTarget}) {
    if (has(id)) plan.signature_ids.emplace_back(id);
  }
  plan.rank_prefilter = has(kRankVanishing);
  plan.residue_active = rank_residue || (q.hartshorne && has(kSegreFormulas) && has(kRankVanishing));
  return plan;
}

/// A tuple with every field fixed except the Chern classes beyond c_1.
struct Signature {
  SetupParams params;
  Integer c1;
  bool forced_tail = false;
};

SetupParams with_c1(int n, int r, const Integer& c1) {
  SetupParams p;
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
  c[0] = 1;
  if (n >= 1) c[1] = c1;
  p.chern = ChernData(n, r + 1, std::move(c));
  return p;
}

void push_signature(std::vector<Signature>& out, int n, int r, int m, const Integer& d, const Integer& a, const Integer& b, const Integer& tau,
                    const Integer& alpha, const Integer& c1, SetupFlags flags) {
  Signature s;
  s.params = with_c1(n, r, c1);
  s.params.m = m;
  s.params.n = n;
  s.params.r = r;
  s.params.d = d;
  s.params.a = a;
  s.params.b = b;
  s.params.tau = tau;
  s.params.alpha = alpha;
  s.params.flags = flags;
  s.c1 = c1;
  s.forced_tail = flags.e_nonample;
  out.push_back(std::move(s));
}

bool in_opt(const std::optional<IntRange>& range, const Integer& x) { return !range || (x.fits_slong_p() && range->contains(x.get_si())); }

std::vector<Signature> signatures(const EnumerationQuery& q, std::map<std::string, long long>& elim, long long& examined) {
  std::vector<Signature> out;
  for (long n = q.n.lo; n <= q.n.hi; ++n) {
    for (long r = q.r.lo; r <= q.r.hi; ++r) {
      if (q.y_is_projective_space) {
        for (long d = q.d.lo; d <= q.d.hi; ++d) {
          ++examined;
          if (n % d != 0) {
            ++elim["structural"];
            continue;
          }
          const long m = n + r - n / d - 1;
          const Integer tau = n + r + 1, alpha = 1;
          if (!in_opt(q.m, m) || !in_opt(q.tau, tau) || !in_opt(q.alpha, alpha)) {
            ++elim["outside_range"];
            continue;
          }
          push_signature(out, static_cast<int>(n), static_cast<int>(r), static_cast<int>(m), d, 1, 0, tau, alpha, (d - 1) * (n / d) + 1,
                         {true, d >= 2, true});
        }
        continue;
      }
      const IntRange mr = q.m.value_or(IntRange{0, n + r - 2});
      for (long m = std::max(0L, mr.lo); m <= std::min(mr.hi, n + r - 2); ++m) {
        for (long tau = q.tau->lo; tau <= q.tau->hi; ++tau) {
          for (long alpha = q.alpha->lo; alpha <= q.alpha->hi; ++alpha) {
            ++examined;
            const auto dc = derive_nonample_d_c1(static_cast<int>(n), static_cast<int>(r), static_cast<int>(m), tau);
            if (!dc || dc->first < 1 || !in_opt(q.d, dc->first)) {
              ++elim["structural"];
            } else {
              push_signature(out, static_cast<int>(n), static_cast<int>(r), static_cast<int>(m), dc->first, 1, 0, tau, alpha, dc->second,
                             {false, q.w_nonlinear, true});
            }
            if (q.nonample_only) continue;
            const IntRange ar = q.a.value_or(IntRange{2, 4});
            for (long a = std::max(2L, ar.lo); a <= ar.hi; ++a) {
              for (long b = 0; b < a; ++b) {
                for (long d = q.d.lo; d <= q.d.hi; ++d) {
                  ++examined;
                  const long num = n + r - m - 1 - b * (r + 1);
                  if ((1 + b * d) % a != 0 || num % a != 0) {
                    ++elim["structural"];
                    continue;
                  }
                  const Integer c1 = n + 1 - num / a;
                  const Integer t = Integer(d) * (n + 1 - c1) + (r + 1) * ((1 + b * d) / a);
                  if (t != tau) {
                    ++elim["structural"];
                    continue;
                  }
                  push_signature(out, static_cast<int>(n), static_cast<int>(r), static_cast<int>(m), d, a, b, tau, alpha, c1,
                                 {false, q.w_nonlinear, false});
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

/// Cited and assumed bounds in the Y = P^{n+r} regime; empty when the tuple is kept.
std::string flag_elimination(const EnumerationQuery& q, const SetupParams& p) {
  if (!p.flags.y_is_projective_space || p.d < 2) return {};
  const long n = p.n, r = p.r, m = p.m;
  if (q.hartshorne && 3 * m > 2 * (n + r)) return "hartshorne";
  if (q.cited_bounds) {
    if (p.d == 2 && 3 * m > 2 * (n + r)) return "cited_quadratic_bound";
    const Integer nd = n / p.d;
    if (r >= nd + 1 && 4 * m >= 3 * (n + r) - 2) return "cited_few_equations_bound";
  }
  return {};
}

struct Outcome {
  std::optional<Survivor> survivor;
  std::string reason;
};

std::vector<std::string> tags_for(const Signature& s, const std::vector<const ExampleRecord*>& matches) {
  std::vector<std::string> tags;
  for (const auto* rec : matches) tags.push_back("registry:" + rec->key);
  const SetupParams& p = s.params;
  if (p.flags.y_is_projective_space && p.d >= 3 && p.d * p.r == p.n) tags.emplace_back("residual_family");
  if (s.c1 <= 5) tags.emplace_back("c1_le_5");
  if (p.r == 1) tags.emplace_back("r_eq_1");
  return tags;
}

/// Segre vector with the forced tail filled in; free slots left at zero.
std::vector<Integer> base_segre(const Signature& s, std::vector<int>& free_idx) {
  const SetupParams& p = s.params;
  std::vector<Integer> seg(static_cast<std::size_t>(p.n) + 1, Integer(0));
  seg[0] = 1;
  if (p.n >= 1) seg[1] = -s.c1;
  long lo = 2;
  if (s.forced_tail) {
    lo = std::max<long>(2, s.c1 - 1 <= p.n ? Integer(s.c1 - 1).get_si() : p.n + 1);
    for (long i = lo; i <= p.n; ++i) seg[i] = sign_power(i) * ipow(p.d, static_cast<unsigned long>(p.n - i)) * p.alpha;
  } else {
    lo = p.n + 1;
  }
  for (long i = 2; i < lo && i <= p.n; ++i) free_idx.push_back(static_cast<int>(i));
  return seg;
}

bool rank_ok(const ChernData& c, int r) {
  for (int i = r + 2; i <= c.n(); ++i)
    if (c[i] != 0) return false;
  return true;
}

/// True if some modulus proves that no integral Chern completion exists.
std::optional<long> residue_certificate(const Signature& s, long long budget) {
  const SetupParams& p = s.params;
  const int n = p.n;
  const int k = std::min(p.r + 1, n);
  std::vector<int> dummy;
  const std::vector<Integer> target = base_segre(s, dummy);
  std::vector<bool> forced(static_cast<std::size_t>(n) + 1, false);
  for (int i = 0; i <= n; ++i) forced[i] = std::find(dummy.begin(), dummy.end(), i) == dummy.end();
  for (long mod : kModuli) {
    const int vars = std::max(0, k - 1);
    long long count = 1;
    bool over = false;
    for (int v = 0; v < vars; ++v) {
      count *= mod;
      if (count > budget) {
        over = true;
        break;
      }
    }
    if (over) continue;
    std::vector<long> tgt(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) tgt[i] = mod_floor(target[i], mod).get_si();
    std::vector<long> c(static_cast<std::size_t>(k) + 1, 0), seg(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    if (k >= 1) c[1] = mod_floor(s.c1, mod).get_si();
    bool found = false;
    for (long long idx = 0; idx < count && !found; ++idx) {
      long long rest = idx;
      for (int v = 0; v < vars; ++v) {
        c[2 + v] = rest % mod;
        rest /= mod;
      }
      seg[0] = 1;
      bool ok = true;
      for (int j = 1; j <= n && ok; ++j) {
        long acc = 0;
        for (int i = 1; i <= std::min(j, k); ++i) acc = (acc + c[i] * seg[j - i]) % mod;
        seg[j] = (mod - acc) % mod;
        if (forced[j] && seg[j] != tgt[j]) ok = false;
      }
      found = ok;
    }
    if (!found) return mod;
  }
  return std::nullopt;
}

Outcome process(const EnumerationQuery& q, const Plan& plan, const Signature& sig,
                const std::multimap<std::string, const ExampleRecord*>& registry) {
  const SetupParams& p = sig.params;
  const std::string key = signature_key(p);
  std::vector<const ExampleRecord*> matches;
  for (auto [it, end] = registry.equal_range(key); it != end; ++it) matches.push_back(it->second);

  if (std::string why = flag_elimination(q, p); !why.empty()) return {std::nullopt, why};
  const bool delegated = q.c1_at_least_6 && (sig.c1 <= 5 || p.r == 1);

  const ConstraintReport sig_report = run_selected(p, plan.signature_ids);
  if (!sig_report.all_pass()) return {std::nullopt, "signature:" + sig_report.failures().front()};

  for (const auto* rec : matches) {
    ConstraintReport rep = run_selected(rec->params, plan.selected);
    if (rep.all_pass()) return {Survivor{rec->params, std::move(rep), SurvivorStatus::witness, tags_for(sig, matches)}, {}};
  }
  if (delegated) return {std::nullopt, "c1_at_least_6"};

  std::vector<int> free_idx;
  std::vector<Integer> seg = base_segre(sig, free_idx);
  const std::size_t f = free_idx.size();
  auto try_candidate = [&](const std::vector<Integer>& s) -> std::optional<Survivor> {
    SetupParams cand = p;
    cand.chern = chern_from_segre(SegreData(p.n, s), p.r + 1);
    if (plan.rank_prefilter && !rank_ok(cand.chern, p.r)) return std::nullopt;
    ConstraintReport rep = run_selected(cand, plan.selected);
    if (!rep.all_pass()) return std::nullopt;
    return Survivor{std::move(cand), std::move(rep), SurvivorStatus::witness, tags_for(sig, matches)};
  };

  if (f == 0) {
    if (auto s = try_candidate(seg)) return {std::move(s), {}};
    return {std::nullopt, "chern_forced"};
  }

  // Free values by shells of growing max-norm, each coordinate ordered 0, 1, -1, 2, -2, ...
  long long tried = 0;
  for (long radius = 0; radius <= q.segre_bound && tried < q.witness_budget; ++radius) {
    std::vector<long> vals;
    vals.push_back(0);
    for (long v = 1; v <= radius; ++v) {
      vals.push_back(v);
      vals.push_back(-v);
    }
    std::vector<std::size_t> odo(f, 0);
    while (tried < q.witness_budget) {
      long norm = 0;
      for (std::size_t i = 0; i < f; ++i) norm = std::max(norm, std::abs(vals[odo[i]]));
      if (norm == radius) {
        ++tried;
        for (std::size_t i = 0; i < f; ++i) seg[free_idx[i]] = vals[odo[i]];
        if (auto s = try_candidate(seg)) return {std::move(s), {}};
      }
      std::size_t pos = 0;
      while (pos < f && ++odo[pos] == vals.size()) odo[pos++] = 0;
      if (pos == f) break;
    }
  }

  if (plan.residue_active && sig.forced_tail) {
    if (auto mod = residue_certificate(sig, q.residue_budget)) return {std::nullopt, "residue_mod_" + std::to_string(*mod)};
  }
  return {Survivor{p, sig_report, SurvivorStatus::undetermined, tags_for(sig, matches)}, {}};
}

auto sort_key(const SetupParams& p) { return std::tie(p.n, p.r, p.d, p.m, p.a, p.b, p.tau, p.alpha); }

}  // namespace

EnumerationResult enumerate(const EnumerationQuery& q) {
  q.validate();
  const long long count = q.tuple_count();
  if (count > q.budget) {
    throw RangeTooLarge("enumeration covers " + std::to_string(count) + " tuples, budget is " + std::to_string(q.budget));
  }
  EnumerationResult result;
  const Plan plan = make_plan(q);
  const std::vector<Signature> sigs = signatures(q, result.eliminated, result.tuples_examined);

  const int max_n = static_cast<int>(std::clamp<long>(q.n.hi, 6, 12));
  const std::vector<ExampleRecord> records = catalog(max_n);
  std::multimap<std::string, const ExampleRecord*> registry;
  for (const auto& rec : records) registry.emplace(signature_key(rec.params), &rec);

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(q.threads), std::max<std::size_t>(1, sigs.size()));
  std::vector<std::vector<Outcome>> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](std::size_t w) {
    try {
      for (std::size_t i = w; i < sigs.size(); i += workers) partial[w].push_back(process(q, plan, sigs[i], registry));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (auto& part : partial) {
    for (auto& o : part) {
      if (o.survivor) {
        result.survivors.push_back(std::move(*o.survivor));
      } else {
        ++result.eliminated[o.reason];
      }
    }
  }
  std::sort(result.survivors.begin(), result.survivors.end(),
            [](const Survivor& x, const Survivor& y) { return sort_key(x.params) < sort_key(y.params); });
  return result;
}

}  // namespace pbundle

#include "jwtl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "jwtl/closed_forms.hpp"
#include "jwtl/fixtures.hpp"
#include "jwtl/histories.hpp"
#include "jwtl/projections.hpp"

namespace jwtl {

namespace {

using Case = std::optional<Json>;
using Clock = std::chrono::steady_clock;

QRat qi(long n) { return QRat::qint(n); }
QRat qpow(int k) { return QRat(LaurentPoly::monomial(1, k)); }

Json diagram_json(const DecoratedDiagram& d) {
  Json j = to_json(d);
  j["word"] = word_to_string(reduced_word(d));
  return j;
}

Case mismatch(Json where, const QRat& want, const QRat& got) {
  if (want == got) return std::nullopt;
  where["expected"] = to_json(want);
  where["got"] = to_json(got);
  return where;
}

Case failed(Json where) { return where; }

struct Runner {
  std::string suite;
  unsigned threads;
  std::vector<CheckResult>& out;

  void check(std::string name, std::string certifies, size_t n, const std::function<Case(size_t)>& f) {
    auto t0 = Clock::now();
    std::vector<Case> res(n);
    std::atomic<size_t> next{0};
    auto work = [&] {
      for (size_t i; (i = next++) < n;) {
        try {
          res[i] = f(i);
        } catch (const std::exception& e) {
          res[i] = Json{{"case", i}, {"exception", e.what()}};
        }
      }
    };
    std::vector<std::thread> pool;
    for (size_t k = 1; k < std::min<size_t>(threads, n); ++k) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    CheckResult c{suite, std::move(name), std::move(certifies), static_cast<long>(n), 0, std::nullopt, 0};
    for (auto& r : res)
      if (r) {
        if (!c.counterexample) c.counterexample = std::move(*r);
        ++c.failures;
      }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back(std::move(c));
  }
};

template <class T>
std::function<Case(size_t)> over(const std::vector<T>& items, std::function<Case(const T&)> f) {
  return [&items, f](size_t i) { return f(items[i]); };
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

BigInt binom(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt catalan(unsigned n) { return binom(2 * n, n) / (n + 1); }

bool adjacent_in_d(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == 0) return j == 2;
  return j == i + 1;
}

QRat random_qrat(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), len(1, 4), low(-3, 3);
  auto poly = [&] {
    std::vector<BigInt> v(len(rng));
    for (auto& x : v) x = coeff(rng);
    return LaurentPoly::from_dense(low(rng), v);
  };
  LaurentPoly den = poly();
  while (den.is_zero()) den = poly();
  return QRat::normalize(poly(), den);
}

struct DiagramCase {
  int n;  // projection index; the diagram has rank n + 1
  DecoratedDiagram d;
};

std::vector<DiagramCase> basis_cases(int max_rank, Parity p) {
  std::vector<DiagramCase> out;
  for (int r = 2; r <= max_rank; ++r)
    for (auto& d : enumerate_basis(r, p)) out.push_back({r - 1, std::move(d)});
  return out;
}

void warm_up(int max_rank) {
  for (int n = 0; n < max_rank; ++n) compute_Q(n);
  for (int r = 1; r <= max_rank; ++r) basis_words(r);
}

// ---------------------------------------------------------------------------

void suite_arith(Runner& run, int max_rank) {
  run.check("q-integers", "[n] is palindromic, equals n at q = 1, [-n] = -[n] and [n+1] = [2][n] - [n-1]", 51,
            [](size_t i) -> Case {
              const long n = static_cast<long>(i);
              QRat x = qi(n);
              bool ok = x.num().is_palindromic() && x.eval_at_one() == mpq_class(n) && qi(-n) == -x &&
                        qi(n + 1) == qi(2) * x - qi(n - 1);
              return ok ? Case{} : failed({{"n", n}});
            });
  run.check("q-integer addition", "[m+n] = q^n [m] + q^-m [n] and [2n]/[n] = q^n + q^-n", 21 * 21, [](size_t i) -> Case {
    const int m = static_cast<int>(i / 21), n = static_cast<int>(i % 21);
    if (auto c = mismatch({{"m", m}, {"n", n}}, qi(m + n), qpow(n) * qi(m) + qpow(-m) * qi(n))) return c;
    if (n == 0) return std::nullopt;
    return mismatch({{"n", n}}, qpow(n) + qpow(-n), qi(2 * n) / qi(n));
  });
  run.check("field axioms", "rational functions form a commutative field under canonical reduction", 300, [](size_t i) -> Case {
    std::mt19937 rng(static_cast<unsigned>(1000 + i));
    QRat a = random_qrat(rng), b = random_qrat(rng), c = random_qrat(rng);
    bool ok = (a + b) * c == a * c + b * c && a * b == b * a && (a + b) + c == a + (b + c) &&
              (a * b) * c == a * (b * c) && (a - a).is_zero();
    if (ok && !b.is_zero()) ok = (a * b) / b == a && (a / b) * b == a;
    return ok ? Case{} : failed({{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}});
  });
  std::vector<std::pair<int, int>> nj;
  for (int n = 2; n <= 20; ++n)
    for (int j = 1; j < n; ++j) nj.push_back({n, j});
  run.check("summation lemma", "sum over k = j+1..n of [k][k-1]/([2k][2k-2]) equals [n][j][n-j]/([2n][2j]) for 1 <= j < n <= 20",
            nj.size(), [&nj](size_t i) -> Case {
              auto [n, j] = nj[i];
              QRat lhs;
              for (int k = j + 1; k <= n; ++k) lhs += qi(k) * qi(k - 1) / (qi(2 * k) * qi(2 * k - 2));
              return mismatch({{"n", n}, {"j", j}}, qi(n) * qi(j) * qi(n - j) / (qi(2 * n) * qi(2 * j)), lhs);
            });
  warm_up(max_rank);
  std::vector<QRat> values;
  {
    std::set<std::string> seen;
    for (int n = 0; n < max_rank; ++n)
      for (const auto& [d, c] : compute_Q(n).terms())
        if (seen.insert(c.to_string()).second) values.push_back(c);
  }
  run.check("serialization round trip", "every coefficient survives the q-integer text form and the JSON form", values.size(),
            [&values](size_t i) -> Case {
              const QRat& x = values[i];
              if (auto c = mismatch({{"text", to_qint_string(x)}}, x, parse_qexpr(to_qint_string(x)))) return c;
              return mismatch({{"json", to_json(x)}}, x, qrat_from_json(to_json(x)));
            });
}

void suite_relations(Runner& run, int max_rank) {
  struct Rel {
    int r, i, j;
  };
  std::vector<Rel> rels;
  for (int r = 2; r <= max_rank + 1; ++r)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) rels.push_back({r, i, j});
  run.check("defining relations", "E_i^2 = -[2]E_i, E_iE_jE_i = E_i on adjacent nodes and E_iE_j = E_jE_i otherwise",
            rels.size(), [&rels](size_t k) -> Case {
              auto [r, i, j] = rels[k];
              Json where{{"rank", r}, {"i", i}, {"j", j}};
              if (i == j) {
                ScaledDiagram s = compose(generator(r, i), generator(r, i));
                return s.scalar == -qi(2) && s.diagram == generator(r, i) ? Case{} : failed(where);
              }
              if (adjacent_in_d(i, j)) {
                ScaledDiagram t = word_to_element({i, j, i}, r);
                return t.scalar.is_one() && t.diagram == generator(r, i) ? Case{} : failed(where);
              }
              ScaledDiagram u = word_to_element({i, j}, r), v = word_to_element({j, i}, r);
              return u.scalar == v.scalar && u.diagram == v.diagram ? Case{} : failed(where);
            });

  std::vector<std::vector<DecoratedDiagram>> basis(max_rank + 1);
  std::vector<std::set<DecoratedDiagram>> basis_set(max_rank + 1);
  std::vector<std::pair<int, int>> lefts;
  for (int r = 1; r <= max_rank; ++r) {
    basis[r] = enumerate_basis(r, Parity::all);
    basis_set[r] = {basis[r].begin(), basis[r].end()};
    for (size_t k = 0; k < basis[r].size(); ++k) lefts.push_back({r, static_cast<int>(k)});
  }
  run.check("closed products", "the product of two basis diagrams is a scalar multiple of a basis diagram", lefts.size(),
            [&](size_t k) -> Case {
              auto [r, a] = lefts[k];
              for (const auto& b : basis[r]) {
                ScaledDiagram s = compose(basis[r][a], b);
                if (!basis_set[r].count(s.diagram))
                  return failed({{"top", to_json(basis[r][a])}, {"bottom", to_json(b)}, {"result", to_json(s.diagram)}});
              }
              return std::nullopt;
            });
  run.check("associativity", "(ab)c = a(bc) on random triples of basis diagrams", 600, [&](size_t k) -> Case {
    std::mt19937 rng(static_cast<unsigned>(7 + k));
    const int r = 2 + static_cast<int>(k % static_cast<size_t>(max_rank - 1));
    const auto& bs = basis[r];
    std::uniform_int_distribution<size_t> pick(0, bs.size() - 1);
    const auto &a = bs[pick(rng)], &b = bs[pick(rng)], &c = bs[pick(rng)];
    ScaledDiagram ab = compose(a, b), bc = compose(b, c);
    ScaledDiagram l = compose(ab.diagram, c), rr = compose(a, bc.diagram);
    bool ok = l.diagram == rr.diagram && ab.scalar * l.scalar == bc.scalar * rr.scalar;
    return ok ? Case{} : failed({{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}});
  });
  run.check("reduced words", "every basis diagram is a word in the generators with scalar 1", static_cast<size_t>(max_rank),
            [&](size_t k) -> Case {
              const int r = static_cast<int>(k) + 1;
              auto words = basis_words(r);
              if (words.size() != basis[r].size()) return failed({{"rank", r}, {"words", words.size()}});
              for (const auto& [d, w] : words) {
                ScaledDiagram s = word_to_element(w, r);
                if (!(s.diagram == d) || !s.scalar.is_one()) return failed({{"rank", r}, {"word", word_to_string(w)}});
              }
              return std::nullopt;
            });
  run.check("structure counts",
            "the basis has binom(2r,r)/2 even and C_r - 1 single-dot diagrams, (r+3)C_r/2 - 1 in total, for r <= 8; "
            "the rank-4 projection has dims(4) terms",
            9, [](size_t k) -> Case {
              if (k == 8) {
                Dims d4 = dims(4);
                long listed = static_cast<long>(golden_element('Q', 3).size());
                return d4.total == 48 && listed == 48 ? Case{} : failed({{"dims4", d4.total.get_str()}, {"listed", listed}});
              }
              const unsigned r = static_cast<unsigned>(k) + 1;
              Dims d = dims(static_cast<int>(r));
              BigInt even = enumerate_basis(static_cast<int>(r), Parity::even).size();
              BigInt odd = enumerate_basis(static_cast<int>(r), Parity::odd).size();
              BigInt total = (r + 3) * catalan(r) / 2 - 1;
              bool ok = d.even == even && d.odd == odd && d.total == even + odd && even == binom(2 * r, r) / 2 &&
                        odd == catalan(r) - 1 && d.total == total;
              return ok ? Case{}
                        : failed({{"rank", r}, {"even", even.get_str()}, {"odd", odd.get_str()}, {"dims", d.total.get_str()}});
            });

  warm_up(max_rank);
  std::vector<std::pair<int, int>> axioms;
  for (int n = 0; n < max_rank; ++n)
    for (int g = 0; g <= n; ++g) axioms.push_back({n, g});
  run.check("projection axioms",
            "E_i Q_n = Q_n E_i = 0 and E_i P_n = P_n E_i = 0 for every generator, identity coefficient 1, Q_n^2 = Q_n for n <= 2",
            axioms.size(), [&axioms](size_t k) -> Case {
              auto [n, g] = axioms[k];
              const TLElement& q = compute_Q(n);
              const int r = q_rank(n);
              Json where{{"n", n}, {"generator", g}};
              TLElement e = TLElement::from_word({g}, r);
              if (!q.coef(DecoratedDiagram::identity(r)).is_one() || !(e * q).is_zero() || !(q * e).is_zero())
                return failed(where);
              if (g >= 1 && n >= 1) {
                TLElement p = compute_P(n), ea = TLElement::from_word({g}, n + 1);
                if (!(ea * p).is_zero() || !(p * ea).is_zero()) return failed(where);
              }
              if (g == 0 && n <= 2 && !(q * q == q)) return failed(where);
              return std::nullopt;
            });

  struct Act {
    int n;
    std::string name;
    Word lhs, rhs;
    QRat scalar;
  };
  std::vector<Act> acts;
  auto cat = [](Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  for (int n = 1; n <= max_rank; ++n) {
    const Word en = {n + 1}, ew = w_word(n + 1);
    for (int i = 1; i <= n + 1; ++i) {
      acts.push_back({n, "E_{n+1} g(n," + std::to_string(i) + ")", cat(en, g_word(n, i)), g_word(n + 1, i), QRat(1)});
      acts.push_back({n, "E_w g(n," + std::to_string(i) + ")", cat(ew, g_word(n, i)), h_word(n + 1, i), QRat(1)});
    }
    for (int j = 0; j <= n; ++j) {
      acts.push_back({n, "E_{n+1} h(n," + std::to_string(j) + ")", cat(en, h_word(n, j)), h_word(n + 1, j), QRat(1)});
      acts.push_back({n, "E_w h(n," + std::to_string(j) + ")", cat(ew, h_word(n, j)), h_word(n + 1, j == 0 ? 1 : j),
                      j == 0 ? QRat(1) : -qi(2)});
    }
  }
  run.check("generator action on g and h", "left multiplication by E_{n+1} and E_w maps g(n,i) and h(n,j) to g(n+1,.) and h(n+1,.)",
            acts.size(), [&acts](size_t k) -> Case {
              const Act& a = acts[k];
              const int r = a.n + 2;
              ScaledDiagram l = word_to_element(a.lhs, r), rr = word_to_element(a.rhs, r);
              bool ok = l.diagram == rr.diagram && l.scalar == a.scalar * rr.scalar;
              return ok ? Case{} : failed({{"n", a.n}, {"identity", a.name}});
            });
}

void suite_engines(Runner& run, int max_rank) {
  warm_up(max_rank);
  auto all = basis_cases(max_rank, Parity::all);
  auto even = basis_cases(max_rank, Parity::even);
  auto odd = basis_cases(max_rank, Parity::odd);
  auto where = [](const DiagramCase& c) { return Json{{"n", c.n}, {"diagram", diagram_json(c.d)}}; };
  auto want = [](const DiagramCase& c) { return compute_Q(c.n).coef(c.d); };

  const int sent_max = std::min(max_rank - 1, 3);
  run.check("three-term recursion", "the three-term recursion and the product recursion give the same Q_n for rank <= 4",
            static_cast<size_t>(sent_max + 1), [](size_t k) -> Case {
              const int n = static_cast<int>(k);
              TLElement s = compute_Q_sentinelli(n);
              const TLElement& q = compute_Q(n);
              if (s == q) return std::nullopt;
              std::set<DecoratedDiagram> ds;
              for (const auto& [d, c] : s.terms()) ds.insert(d);
              for (const auto& [d, c] : q.terms()) ds.insert(d);
              for (const auto& d : ds)
                if (auto c = mismatch({{"n", n}, {"diagram", to_json(d)}}, q.coef(d), s.coef(d))) return c;
              return failed({{"n", n}});
            });
  run.check("product recursion summands", "the product-recursion contributions to each diagram sum to its coefficient", all.size(),
            over<DiagramCase>(all, [&](const DiagramCase& c) { return mismatch(where(c), want(c), sum_of(product_terms(c.n, c.d))); }));
  run.check("even recursion", "the innermost-cap recursion for even diagrams reproduces every coefficient", even.size(),
            over<DiagramCase>(even, [&](const DiagramCase& c) { return mismatch(where(c), want(c), coef_even_recursive(c.d)); }));
  run.check("odd recursion", "the innermost-cap recursion for single-dot diagrams reproduces every coefficient", odd.size(),
            over<DiagramCase>(odd, [&](const DiagramCase& c) { return mismatch(where(c), want(c), coef_odd_recursive(c.d)); }));
  run.check("mixed recursion", "the recursion through even coefficients reproduces every single-dot coefficient", odd.size(),
            over<DiagramCase>(odd, [&](const DiagramCase& c) { return mismatch(where(c), want(c), coef_mixed_recursive(c.d)); }));
  run.check("even tiling sum", "coef(D) = Z(mu): weighted admissible Dyck tilings give every even coefficient", even.size(),
            over<DiagramCase>(even, [&](const DiagramCase& c) { return mismatch(where(c), coef_even_recursive(c.d), z_even(c.d)); }));
  run.check("bicolored history sum", "coef(D^odd) = Z'(lambda, mu_0): bicolored histories give every single-dot coefficient",
            odd.size(),
            over<DiagramCase>(odd, [&](const DiagramCase& c) { return mismatch(where(c), coef_odd_recursive(c.d), z_prime(c.d)); }));

  std::vector<std::pair<int, Matching>> ms;
  std::vector<TLElement> ps(max_rank + 1);
  for (int r = 2; r <= max_rank; ++r) {
    ps[r] = compute_P(r - 1);
    for (auto& m : enumerate_matchings(r)) ms.push_back({r, std::move(m)});
  }
  run.check("type A engines",
            "P_n coefficients agree with the type A recursion, the tiling sum and the decorated linear combination", ms.size(),
            [&](size_t k) -> Case {
              const auto& [r, m] = ms[k];
              QRat p = ps[r].coef(DecoratedDiagram::plain(m));
              Json w{{"rank", r}, {"pairs", to_json(DecoratedDiagram::plain(m))["pairs"]}};
              if (auto c = mismatch(w, p, coef_A_recursive(m))) return c;
              if (auto c = mismatch(w, p, wt_A(DyckPath(m.dyck_word())))) return c;
              return mismatch(w, p, typeA_combination(m));
            });
}

void suite_tilings(Runner& run, int max_rank) {
  struct Region {
    DyckPath lo, up;
  };
  std::vector<Region> small, regions;
  for (int n = 1; n <= max_rank; ++n)
    for (const auto& lo : DyckPath::all(n))
      for (const auto& up : DyckPath::all(n))
        if (path_leq(lo, up)) {
          regions.push_back({lo, up});
          if (n <= 4) small.push_back({lo, up});
        }
  auto region_json = [](const Region& g) { return Json{{"lower", g.lo.word()}, {"upper", g.up.word()}}; };

  run.check("enumerator oracle", "the tiling enumerator matches an exact-cover search on every region of size <= 4", small.size(),
            over<Region>(small, [&](const Region& g) -> Case {
              auto fast = enumerate_tilings(g.lo, g.up);
              if (fast != enumerate_tilings_bruteforce(g.lo, g.up)) return failed(region_json(g));
              for (const auto& t : fast) validate(t);
              return std::nullopt;
            }));
  run.check("factorial totals", "tilings of all regions under the top path number n! (by exact cover for n <= 4)",
            static_cast<size_t>(max_rank), [](size_t k) -> Case {
              const int n = static_cast<int>(k) + 1;
              long total = 0, brute = 0;
              for (const auto& lo : DyckPath::all(n)) {
                total += static_cast<long>(enumerate_tilings(lo, DyckPath::top(n)).size());
                if (n <= 4) brute += static_cast<long>(enumerate_tilings_bruteforce(lo, DyckPath::top(n)).size());
              }
              bool ok = total == factorial(n) && (n > 4 || brute == factorial(n));
              return ok ? Case{} : failed({{"n", n}, {"total", total}, {"exact_cover", brute}});
            });
  run.check("trajectory properties",
            "at most n-1 vertical trajectories, each ending on a down step of the upper path, pairwise non-crossing; "
            "mirroring exchanges vertical and horizontal histories",
            regions.size(), over<Region>(regions, [&](const Region& g) -> Case {
              const int n = g.lo.size();
              for (const auto& t : enumerate_tilings(g.lo, g.up)) {
                Json w = to_json(t);
                auto v = vertical_history(t);
                if (v.size() > static_cast<size_t>(std::max(n - 1, 0))) return failed(w);
                std::set<std::pair<int, int>> points;  // doubled edge midpoints
                size_t expected = 0;
                for (const auto& tr : v) {
                  const Tile& first = t.tiles[tr.tiles.front()];
                  const Tile& last = t.tiles[tr.tiles.back()];
                  if (first.left() != tr.start_step || g.up.step(tr.end_step) != 'D' ||
                      g.up.height(tr.end_step) != last.height())
                    return failed(w);
                  for (int k : tr.tiles) points.insert({2 * t.tiles[k].left() - 1, 2 * t.tiles[k].height() - 1});
                  points.insert({2 * last.right() + 1, 2 * last.height() + 1});
                  expected += tr.tiles.size() + 1;
                }
                if (points.size() != expected) return failed(w);
                for (const auto& tr : horizontal_history(t)) {
                  const Tile& first = t.tiles[tr.tiles.front()];
                  if (g.up.step(tr.start_step) != 'U' || g.up.height(tr.start_step) != first.height() + 1) return failed(w);
                }
                Tiling m = mirror(t);
                validate(m);
                if (!(mirror(m) == t) || vertical_history(m).size() != horizontal_history(t).size()) return failed(w);
              }
              return std::nullopt;
            }));

  std::vector<DyckPath> lowers;
  for (int n = 1; n <= max_rank; ++n)
    for (const auto& lo : DyckPath::all(n))
      if (!lo.is_top()) lowers.push_back(lo);
  run.check("deletion condition", "the trajectory-count condition holds exactly when the deletions leave only trivial tiles",
            lowers.size(), over<DyckPath>(lowers, [](const DyckPath& lo) -> Case {
              const int n = lo.size();
              for (const auto& t : enumerate_tilings(lo, DyckPath::top(n))) {
                Tiling cur = t;
                for (int m = 1; m <= n; ++m) {
                  cur = deletion(cur);
                  if (weakly_decreasing(q4_counts(t, m)) != cur.all_trivial()) return failed({{"tiling", to_json(t)}, {"m", m}});
                  if (cur.lower.is_top()) break;
                }
              }
              return std::nullopt;
            }));

  run.check("worked examples",
            "E1E2E3E0 has 2 admissible and 2 excluded tilings with sum [3]^2/([6][4]); E0E1 in Q3 has 6 histories summing to "
            "[3]^3/([6][4]); E0E1E3 has 8 histories summing to [2]^3([2]^2+1)/([6][4]) and 2 rejected with counts (0,1,0)",
            3, [](size_t k) -> Case {
              if (k == 0) {
                DecoratedDiagram d = word_to_element({1, 2, 3, 0}, 4).diagram;
                auto ts = even_tilings(d);
                long adm = std::count_if(ts.begin(), ts.end(), [](const WeightedTiling& w) { return w.admissible; });
                long rej = static_cast<long>(ts.size()) - adm;
                if (adm != 2 || rej != 2) return failed({{"example", "E1E2E3E0"}, {"admissible", adm}, {"rejected", rej}});
                return mismatch({{"example", "E1E2E3E0"}}, parse_qexpr("[3]^2/([6][4])"), z_even(d));
              }
              if (k == 1) {
                auto res = enumerate_bicolored(DyckPath("UDUUDDUD"));
                QRat z;
                for (const auto& h : res.accepted) z += h.weight;
                if (res.accepted.size() != 6) return failed({{"example", "E0E1"}, {"histories", res.accepted.size()}});
                return mismatch({{"example", "E0E1"}}, parse_qexpr("[3]^3/([6][4])"), z);
              }
              auto res = enumerate_bicolored(DyckPath::zigzag(4));
              QRat z;
              for (const auto& h : res.accepted) z += h.weight;
              bool ok = res.accepted.size() == 8 && res.rejected.size() == 2;
              for (const auto& r : res.rejected) ok = ok && r.counts == std::vector<int>{0, 1, 0};
              if (!ok) return failed({{"example", "E0E1E3"}, {"histories", res.accepted.size()}, {"rejected", res.rejected.size()}});
              return mismatch({{"example", "E0E1E3"}}, parse_qexpr("[2]^3([2]^2+1)/([6][4])"), z);
            });

  auto all = basis_cases(max_rank, Parity::all);
  run.check("positive summands", "every tiling and history weight is positive at q = 1", all.size(),
            over<DiagramCase>(all, [](const DiagramCase& c) -> Case {
              if (c.d.is_odd()) {
                for (const auto& h : enumerate_bicolored(DyckPath(to_chord(c.d).path)).accepted)
                  if (h.weight.eval_at_one() <= 0) return failed({{"diagram", to_json(c.d)}, {"tiling", to_json(h.tiling)}});
              } else {
                for (const auto& w : even_tilings(c.d))
                  if (w.admissible && w.weight.eval_at_one() <= 0)
                    return failed({{"diagram", to_json(c.d)}, {"tiling", to_json(w.tiling)}});
              }
              return std::nullopt;
            }));
}

void suite_closed_forms(Runner& run, int max_rank) {
  const int top = std::min(max_rank + 2, 7);
  for (int n = 0; n <= top; ++n) compute_Q(n);
  std::vector<std::pair<int, ClosedFormCase>> cases;
  for (int n = 1; n <= top; ++n)
    for (auto& c : closed_form_cases(n)) {
      bool small = c.pattern == Pattern::chain || c.pattern == Pattern::hook || c.pattern == Pattern::e01;
      if (small || n <= top - 1) cases.push_back({n, std::move(c)});
    }
  run.check("closed forms",
            "chain, hook and e01 formulas for n <= " + std::to_string(top) + ", e013 and the lemma formulas for n <= " +
                std::to_string(top - 1) + " equal the projection coefficients",
            cases.size(), [&cases](size_t k) -> Case {
              const auto& [n, c] = cases[k];
              ScaledDiagram s = word_to_element(c.word, n + 1);
              Json w{{"n", n}, {"case", c.name}, {"word", word_to_string(c.word)}};
              if (!s.scalar.is_one()) return failed(w);
              return mismatch(w, compute_Q(n).coef(s.diagram), c.value);
            });
  run.check("closed form coverage", "every family has an instance at each n from 3 to " + std::to_string(top - 1),
            static_cast<size_t>(std::max(top - 3, 0)), [&cases](size_t k) -> Case {
              const int n = static_cast<int>(k) + 3;
              std::set<Pattern> seen;
              for (const auto& [m, c] : cases)
                if (m == n) seen.insert(c.pattern);
              return seen.size() == 10 ? Case{} : failed({{"n", n}, {"families", seen.size()}});
            });
}

void suite_symmetry(Runner& run, int max_rank) {
  warm_up(max_rank);
  auto all = basis_cases(max_rank, Parity::all);
  run.check("transpose", "coefficients are invariant under flipping diagrams upside down", all.size(),
            over<DiagramCase>(all, [](const DiagramCase& c) {
              const TLElement& q = compute_Q(c.n);
              return mismatch({{"n", c.n}, {"diagram", diagram_json(c.d)}}, q.coef(c.d), q.coef(transpose(c.d)));
            }));
  run.check("theta", "coefficients are invariant under exchanging E0 and E1 in reduced words", all.size(),
            over<DiagramCase>(all, [](const DiagramCase& c) -> Case {
              Word w = reduced_word(c.d);
              ScaledDiagram t = word_to_element(theta(w), c.n + 1);
              Json where{{"n", c.n}, {"word", word_to_string(w)}};
              if (!t.scalar.is_one()) return failed(where);
              const TLElement& q = compute_Q(c.n);
              return mismatch(where, q.coef(c.d), q.coef(t.diagram));
            }));
}

void suite_golden(Runner& run, int) {
  auto projections = golden_projections();
  run.check("golden projections", "P_0..P_2 and Q_0..Q_3 reproduce the reference monomials term for term",
            projections.size(), [&projections](size_t k) -> Case {
              auto [family, n] = projections[k];
              TLElement want = golden_element(family, n);
              TLElement got = family == 'P' ? compute_P(n) : compute_Q(n);
              if (got == want) return std::nullopt;
              Json w{{"projection", std::string(1, family) + std::to_string(n)}, {"listed", want.size()}, {"computed", got.size()}};
              for (const auto& [d, c] : got.terms())
                if (want.coef(d) != c) {
                  w["diagram"] = to_json(d);
                  w["expected"] = to_json(want.coef(d));
                  w["got"] = to_json(c);
                  break;
                }
              return failed(w);
            });
}

using SuiteFn = void (*)(Runner&, int);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s = {
      {"arith", suite_arith},     {"relations", suite_relations},       {"engines", suite_engines},
      {"tilings", suite_tilings}, {"closed-forms", suite_closed_forms}, {"symmetry", suite_symmetry},
      {"golden", suite_golden}};
  return s;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult* SuiteReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Json to_json(const CheckResult& c) {
  Json j;
  j["suite"] = c.suite;
  j["name"] = c.name;
  j["certifies"] = c.certifies;
  j["cases"] = c.cases;
  j["failures"] = c.failures;
  j["passed"] = c.passed();
  if (c.counterexample) j["counterexample"] = *c.counterexample;
  return j;
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["max_rank"] = r.max_rank;
  j["passed"] = r.passed();
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : suites()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, int max_rank, unsigned threads) {
  if (max_rank < 2) throw std::invalid_argument("max rank must be at least 2");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  SuiteReport rep{name, max_rank, {}};
  bool found = false;
  for (const auto& [n, f] : suites()) {
    if (name != "all" && name != n) continue;
    found = true;
    Runner run{n, threads, rep.checks};
    f(run, max_rank);
  }
  if (!found) throw std::invalid_argument("unknown suite: " + name);
  return rep;
}

}  // namespace jwtl

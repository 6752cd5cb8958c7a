#include "revcore/burnside.hpp"

#include <algorithm>
#include <map>

#include "revcore/inverse.hpp"

namespace revcore {

namespace {

constexpr long long kProductCap = 1000000;  // materialized cells per class product

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw invalid_input("integer overflow in Burnside arithmetic");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw invalid_input("integer overflow in Burnside arithmetic");
  return r;
}

long long floor_div(long long a, long long b) {  // b > 0
  long long q = a / b;
  return a % b < 0 ? q - 1 : q;
}

// col_j -= q * col_i
void subtract_scaled(std::vector<long long>& cj, const std::vector<long long>& ci,
                     long long q) {
  for (std::size_t r = 0; r < cj.size(); ++r)
    cj[r] = checked_add(cj[r], -checked_mul(q, ci[r]));
}

struct ClassLess {
  bool operator()(const LatticeClass& a, const LatticeClass& b) const {
    return lattice_class_less(a, b);
  }
};

using TermMap = std::map<LatticeClass, long long, ClassLess>;

BurnsideElement element_from_terms(int rank, const TermMap& terms) {
  BurnsideElement e;
  e.rank = rank;
  for (const auto& [cls, coeff] : terms)
    if (coeff != 0) e.terms.emplace_back(cls, coeff);
  return e;
}

// Coordinates of v in the canonical residue box of H (0 <= w[i] < H[i][i]).
std::vector<long long> reduce_residue(const std::vector<std::vector<long long>>& hnf,
                                      std::vector<long long> v) {
  const int k = static_cast<int>(v.size());
  for (int i = 0; i < k; ++i) {
    long long q = floor_div(v[i], hnf[i][i]);
    for (int r = i; r < k; ++r) v[r] = checked_add(v[r], -checked_mul(q, hnf[r][i]));
  }
  return v;
}

long long residue_index(const std::vector<std::vector<long long>>& hnf,
                        const std::vector<long long>& reduced) {
  long long idx = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i)
    idx = checked_add(checked_mul(idx, hnf[i][i]), reduced[i]);
  return idx;
}

std::vector<long long> residue_at(const std::vector<std::vector<long long>>& hnf,
                                  long long index, int k) {
  std::vector<long long> v(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    v[i] = index % hnf[i][i];
    index /= hnf[i][i];
  }
  return v;
}

// Orbit decomposition of a set of commuting permutations; orbits are listed
// by least member, members ascending, and each orbit yields one class.
TermMap classes_of_permutations(const std::vector<Endo>& perms, int n) {
  TermMap terms;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      orbit.push_back(s);
      for (const Endo& p : perms)
        if (!seen[p[s]]) {
          seen[p[s]] = 1;
          stack.push_back(p[s]);
        }
    }
    std::sort(orbit.begin(), orbit.end());
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < orbit.size(); ++i) position[orbit[i]] = static_cast<int>(i);
    std::vector<Endo> sub(perms.size());
    for (std::size_t g = 0; g < perms.size(); ++g) {
      sub[g].resize(orbit.size());
      for (std::size_t i = 0; i < orbit.size(); ++i) sub[g][i] = position[perms[g][orbit[i]]];
    }
    LatticeClass cls = stabilizer_lattice_hnf(sub, 0);
    terms[cls] = checked_add(terms.count(cls) ? terms[cls] : 0, 1);
  }
  return terms;
}

TermMap class_product(const LatticeClass& c1, const LatticeClass& c2) {
  const int k = c1.rank;
  if (checked_mul(c1.index, c2.index) > kProductCap)
    throw invalid_input("class product larger than the materialization bound");
  const long long n1 = c1.index;
  const long long n2 = c2.index;
  const int n = static_cast<int>(n1 * n2);

  // Diagonal action of the j-th basis vector on pairs of residues.
  auto stepper = [&](const LatticeClass& c, int j) {
    std::vector<int> step(static_cast<std::size_t>(c.index));
    for (long long i = 0; i < c.index; ++i) {
      std::vector<long long> v = residue_at(c.hnf, i, k);
      v[j] = checked_add(v[j], 1);
      step[i] = static_cast<int>(residue_index(c.hnf, reduce_residue(c.hnf, std::move(v))));
    }
    return step;
  };

  std::vector<Endo> perms(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    std::vector<int> s1 = stepper(c1, j);
    std::vector<int> s2 = stepper(c2, j);
    perms[j].resize(static_cast<std::size_t>(n));
    for (long long i1 = 0; i1 < n1; ++i1)
      for (long long i2 = 0; i2 < n2; ++i2)
        perms[j][i1 * n2 + i2] = static_cast<int>(s1[i1] * n2 + s2[i2]);
  }
  return classes_of_permutations(perms, n);
}

}  // namespace

bool lattice_class_less(const LatticeClass& a, const LatticeClass& b) {
  if (a.index != b.index) return a.index < b.index;
  if (a.rank != b.rank) return a.rank < b.rank;
  for (int r = 0; r < a.rank; ++r)
    for (int c = 0; c <= r; ++c)
      if (a.hnf[r][c] != b.hnf[r][c]) return a.hnf[r][c] < b.hnf[r][c];
  return false;
}

std::vector<std::vector<long long>> hermite_normal_form(
    int k, std::vector<std::vector<long long>> vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != k)
      throw invalid_input("relation vector has the wrong length");
  std::vector<std::vector<long long>>& cols = vectors;

  int done = 0;
  for (int row = 0; row < k; ++row) {
    for (;;) {
      int best = -1;
      int active = 0;
      for (int j = done; j < static_cast<int>(cols.size()); ++j) {
        if (cols[j][row] == 0) continue;
        ++active;
        if (best < 0 || std::abs(cols[j][row]) < std::abs(cols[best][row])) best = j;
      }
      if (best < 0) throw invalid_input("lattice does not have full rank");
      if (active == 1) {
        std::swap(cols[done], cols[best]);
        if (cols[done][row] < 0)
          for (auto& e : cols[done]) e = -e;
        break;
      }
      for (int j = done; j < static_cast<int>(cols.size()); ++j) {
        if (j == best || cols[j][row] == 0) continue;
        subtract_scaled(cols[j], cols[best], cols[j][row] / cols[best][row]);
      }
    }
    ++done;
  }

  // Reduce entries below each diagonal into [0, diagonal).
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j) {
      long long q = floor_div(cols[j][i], cols[i][i]);
      if (q != 0) subtract_scaled(cols[j], cols[i], q);
    }

  std::vector<std::vector<long long>> hnf(static_cast<std::size_t>(k),
                                          std::vector<long long>(static_cast<std::size_t>(k), 0));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) hnf[r][c] = cols[c][r];
  return hnf;
}

LatticeClass stabilizer_lattice_hnf(const std::vector<Endo>& perms, int base_point) {
  const int k = static_cast<int>(perms.size());
  LatticeClass cls;
  cls.rank = k;
  if (k == 0) {
    cls.index = 1;
    return cls;
  }
  const int n = static_cast<int>(perms[0].size());
  for (const Endo& p : perms) {
    if (static_cast<int>(p.size()) != n)
      throw invalid_input("permutations act on carriers of different sizes");
    if (!is_bijection(p)) throw invalid_input("stabilizer lattice needs bijections");
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (compose(perms[i], perms[j]) != compose(perms[j], perms[i]))
        throw invalid_input("stabilizer lattice needs commuting permutations");
  if (base_point < 0 || base_point >= n) throw invalid_input("base point out of range");

  std::vector<std::vector<long long>> tag(static_cast<std::size_t>(n));
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<int> queue{base_point};
  visited[base_point] = 1;
  tag[base_point].assign(static_cast<std::size_t>(k), 0);
  std::vector<std::vector<long long>> relations;
  long long orbit_size = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int s = queue[head];
    ++orbit_size;
    for (int j = 0; j < k; ++j) {
      int t = perms[j][s];
      if (!visited[t]) {
        visited[t] = 1;
        tag[t] = tag[s];
        tag[t][j] = checked_add(tag[t][j], 1);
        queue.push_back(t);
      } else {
        std::vector<long long> rel = tag[s];
        rel[j] = checked_add(rel[j], 1);
        bool zero = true;
        for (int r = 0; r < k; ++r) {
          rel[r] = checked_add(rel[r], -tag[t][r]);
          zero = zero && rel[r] == 0;
        }
        if (!zero) relations.push_back(std::move(rel));
      }
    }
  }

  cls.hnf = hermite_normal_form(k, std::move(relations));
  cls.index = 1;
  for (int i = 0; i < k; ++i) cls.index = checked_mul(cls.index, cls.hnf[i][i]);
  if (cls.index != orbit_size)
    throw std::logic_error("stabilizer lattice index differs from the orbit size");
  return cls;
}

LatticeClass trivial_class(int rank) {
  LatticeClass cls;
  cls.rank = rank;
  cls.index = 1;
  cls.hnf.assign(static_cast<std::size_t>(rank),
                 std::vector<long long>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) cls.hnf[i][i] = 1;
  return cls;
}

BurnsideElement burnside_zero(int rank) {
  BurnsideElement e;
  e.rank = rank;
  return e;
}

BurnsideElement burnside_unit(int rank) { return burnside_single(trivial_class(rank)); }

BurnsideElement burnside_single(LatticeClass cls, long long coeff) {
  BurnsideElement e;
  e.rank = cls.rank;
  if (coeff != 0) e.terms.emplace_back(std::move(cls), coeff);
  return e;
}

BurnsideElement burnside_class(const FiniteBiAction& a) {
  if (a.monoid.kind != MonoidKind::FreeCommutative)
    throw invalid_input("Burnside classes need a free commutative monoid");
  if (!a.right_trivial())
    throw invalid_input("Burnside classes need a trivial right side");
  const int k = a.monoid.generator_count();
  if (k == 0) throw invalid_input("Burnside classes need at least one generator");

  std::vector<int> core = reversible_core(a, Side::Left);
  std::vector<int> position(static_cast<std::size_t>(a.size()), -1);
  for (std::size_t p = 0; p < core.size(); ++p) position[core[p]] = static_cast<int>(p);
  std::vector<Endo> perms(static_cast<std::size_t>(k));
  for (int g = 0; g < k; ++g) {
    perms[g].resize(core.size());
    for (std::size_t p = 0; p < core.size(); ++p) {
      int image = position[a.left[g][core[p]]];
      if (image < 0)
        throw std::logic_error("generator does not map the reversible core onto itself");
      perms[g][p] = image;
    }
    if (!is_bijection(perms[g]))
      throw std::logic_error("generator is not a bijection of the reversible core");
  }
  return element_from_terms(k, classes_of_permutations(perms, static_cast<int>(core.size())));
}

BurnsideElement burnside_add(const BurnsideElement& x, const BurnsideElement& y) {
  // The zero element is rank-agnostic.
  if (!x.terms.empty() && !y.terms.empty() && x.rank != y.rank)
    throw invalid_input("Burnside elements have different ranks");
  TermMap terms;
  for (const auto& [cls, coeff] : x.terms) terms[cls] = coeff;
  for (const auto& [cls, coeff] : y.terms) {
    auto it = terms.find(cls);
    terms[cls] = it == terms.end() ? coeff : checked_add(it->second, coeff);
  }
  return element_from_terms(x.terms.empty() ? y.rank : x.rank, terms);
}

BurnsideElement burnside_mul(const BurnsideElement& x, const BurnsideElement& y) {
  if (x.terms.empty() || y.terms.empty())
    return burnside_zero(x.terms.empty() ? y.rank : x.rank);
  if (x.rank != y.rank) throw invalid_input("Burnside elements have different ranks");
  TermMap terms;
  for (const auto& [c1, a1] : x.terms)
    for (const auto& [c2, a2] : y.terms) {
      long long coeff = checked_mul(a1, a2);
      for (const auto& [cls, mult] : class_product(c1, c2)) {
        auto it = terms.find(cls);
        long long add = checked_mul(coeff, mult);
        terms[cls] = it == terms.end() ? add : checked_add(it->second, add);
      }
    }
  return element_from_terms(x.rank, terms);
}

}  // namespace revcore

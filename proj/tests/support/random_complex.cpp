#include "random_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace testsupport {

using namespace s1calc;

Series multiply(const Series& a, const Series& b, int n) {
  const Index rows = a.at(0).rows(), cols = b.at(0).cols();
  Series out(n + 1, SparseMatrix(rows, cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= n; ++j) {
      if (!b[j].is_zero()) out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  return out;
}

Series add(const Series& a, const Series& b) {
  Series out(std::max(a.size(), b.size()));
  for (std::size_t r = 0; r < out.size(); ++r) {
    if (r >= a.size()) out[r] = b[r];
    else if (r >= b.size()) out[r] = a[r];
    else out[r] = a[r] + b[r];
  }
  return out;
}

Series scale(const Rational& c, const Series& a) {
  Series out;
  for (const auto& m : a) out.push_back(c * m);
  return out;
}

Index BlockModel::add_generator(int degree, Part part) {
  const Index i = basis.size();
  basis.push_back({"g" + std::to_string(i), degree});
  parts.push_back(part);
  return i;
}

S1Complex BlockModel::complex() const {
  std::vector<std::vector<MatrixEntry>> entries(truncation + 1);
  for (const auto& a : arrows) entries[a.order].push_back({a.to, a.from, a.coeff});
  std::vector<SparseMatrix> ops;
  for (const auto& e : entries) ops.push_back(SparseMatrix::from_entries(basis.size(), basis.size(), e));
  return S1Complex(basis, ops);
}

SplitS1Complex BlockModel::split() const {
  return SplitS1Complex(complex(), parts, SparseVector::unit(basis.size(), unit));
}

std::vector<std::vector<Index>> BlockModel::components() const {
  std::vector<Index> parent(basis.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : arrows) parent[find(a.from)] = find(a.to);
  std::map<Index, std::vector<Index>> groups;
  for (Index i = 0; i < basis.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<Index>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

Rational RandomComplexes::coefficient() {
  static const int values[] = {1, -1, 2, -2, 3};
  Rational c = values[uniform(0, 4)];
  if (chance(0.15)) c /= 2;
  return c;
}

void RandomComplexes::add_block(BlockModel& m, std::size_t budget) {
  const int n = m.truncation;
  if (budget >= 2 && chance(0.65)) {
    const int r = uniform(0, n);
    const int dx = uniform(-5, 3);
    if (chance(0.15)) {
      // x hits a class of degree 0 in C_0; possibly the unit plus a new class s.
      const Index x = m.add_generator(2 * r - 1, Part::Plus);
      m.arrows.push_back({r, x, m.unit, coefficient()});
      if (chance(0.4)) {
        const Index s = m.add_generator(0, Part::Zero);
        m.arrows.push_back({r, x, s, coefficient()});
      }
      return;
    }
    if (chance(0.2)) {
      const Index x = m.add_generator(dx, Part::Zero);
      const Index y = m.add_generator(dx + 1, Part::Zero);
      m.arrows.push_back({0, x, y, coefficient()});
      return;
    }
    const Index x = m.add_generator(dx, Part::Plus);
    const Index y = m.add_generator(dx + 1 - 2 * r, chance(0.25) ? Part::Zero : Part::Plus);
    m.arrows.push_back({r, x, y, coefficient()});
    return;
  }
  m.add_generator(uniform(-5, 3), chance(0.3) ? Part::Zero : Part::Plus);
}

void RandomComplexes::grow(BlockModel& m, std::size_t size) {
  while (m.basis.size() < size) add_block(m, size - m.basis.size());
}

BlockModel RandomComplexes::blocks() {
  BlockModel m;
  m.truncation = uniform(options_.min_truncation, options_.max_truncation);
  m.unit = m.add_generator(0, Part::Zero);
  m.basis[m.unit].name = "e";
  grow(m, static_cast<std::size_t>(uniform(2, options_.max_generators)));
  return m;
}

namespace {

// (I + S)^-1 for strictly upper triangular S.
SparseMatrix unipotent_inverse(const SparseMatrix& u) {
  const Index n = u.rows();
  const SparseMatrix s = u - SparseMatrix::identity(n);
  SparseMatrix term = SparseMatrix::identity(n), sum = term;
  for (Index p = 1; p <= n && !term.is_zero(); ++p) {
    term = Rational(-1) * (term * s);
    sum = sum + term;
  }
  return sum;
}

}  // namespace

Gauge RandomComplexes::gauge(const BlockModel& m) {
  const Index n = m.basis.size();
  const int trunc = m.truncation;
  std::vector<MatrixEntry> g0;
  for (Index j = 0; j < n; ++j) {
    g0.push_back({j, j, 1});
    for (Index i = 0; i < j; ++i) {
      if (m.basis[i].degree != m.basis[j].degree) continue;
      if (m.parts[j] == Part::Zero && m.parts[i] != Part::Zero) continue;
      if (chance(0.35)) g0.push_back({i, j, coefficient()});
    }
  }
  Gauge out;
  out.g.push_back(SparseMatrix::from_entries(n, n, g0));
  for (int r = 1; r <= trunc; ++r) {
    std::vector<MatrixEntry> gr;
    for (Index j = 0; j < n; ++j) {
      if (m.parts[j] == Part::Zero) continue;
      for (Index i = 0; i < n; ++i) {
        if (m.basis[i].degree == m.basis[j].degree - 2 * r && chance(0.25)) gr.push_back({i, j, coefficient()});
      }
    }
    out.g.push_back(SparseMatrix::from_entries(n, n, gr));
  }
  out.inverse.push_back(unipotent_inverse(out.g[0]));
  for (int r = 1; r <= trunc; ++r) {
    SparseMatrix acc(n, n);
    for (int a = 1; a <= r; ++a) acc = acc + out.g[a] * out.inverse[r - a];
    out.inverse.push_back(Rational(-1) * (out.inverse[0] * acc));
  }
  return out;
}

SplitS1Complex RandomComplexes::conjugate(const BlockModel& m, const Gauge& g) {
  const S1Complex base = m.complex();
  const Series conj = multiply(multiply(g.g, base.operators(), m.truncation), g.inverse, m.truncation);
  return SplitS1Complex(S1Complex(m.basis, conj), m.parts, g.g[0] * SparseVector::unit(m.basis.size(), m.unit));
}

SplitS1Complex RandomComplexes::split_complex() {
  const BlockModel m = blocks();
  return conjugate(m, gauge(m));
}

Series RandomComplexes::random_homotopy(const S1Complex& source, const S1Complex& target) {
  Series h;
  for (int r = 0; r <= source.truncation(); ++r) {
    std::vector<MatrixEntry> entries;
    for (Index j = 0; j < source.size(); ++j) {
      for (Index i = 0; i < target.size(); ++i) {
        if (target.degree_of(i) == source.degree_of(j) - 2 * r - 1 && chance(0.2))
          entries.push_back({i, j, coefficient()});
      }
    }
    h.push_back(SparseMatrix::from_entries(target.size(), source.size(), entries));
  }
  return h;
}

Series null_homotopic(const S1Complex& source, const S1Complex& target, const Series& h) {
  const int n = source.truncation();
  return add(multiply(target.operators(), h, n), multiply(h, source.operators(), n));
}

MorphismCase random_morphism(RandomComplexes& gen) {
  const BlockModel c = gen.blocks();
  BlockModel d;
  d.truncation = c.truncation;
  std::vector<std::pair<Index, Index>> shared;  // (source, target)
  bool unit_shared = false;
  for (const auto& comp : c.components()) {
    if (!gen.chance(0.6)) continue;
    std::map<Index, Index> copy;
    for (Index i : comp) {
      copy[i] = d.add_generator(c.basis[i].degree, c.parts[i]);
      shared.emplace_back(i, copy[i]);
      if (i == c.unit) {
        d.unit = copy[i];
        d.basis[d.unit].name = "e";
        unit_shared = true;
      }
    }
    for (const auto& a : c.arrows) {
      if (copy.count(a.from)) d.arrows.push_back({a.order, copy.at(a.from), copy.at(a.to), a.coeff});
    }
  }
  if (!unit_shared) d.unit = d.add_generator(0, Part::Zero);
  gen.grow(d, std::max<std::size_t>(d.basis.size(), static_cast<std::size_t>(gen.uniform(1, 20))));

  std::vector<MatrixEntry> p;
  for (const auto& [i, j] : shared) p.push_back({j, i, 1});
  Series block_map(c.truncation + 1, SparseMatrix(d.basis.size(), c.basis.size()));
  block_map[0] = SparseMatrix::from_entries(d.basis.size(), c.basis.size(), p);

  const Gauge gc = gen.gauge(c), gd = gen.gauge(d);
  MorphismCase out;
  out.source = gen.conjugate(c, gc);
  out.target = gen.conjugate(d, gd);
  const S1Complex& src = out.source.complex();
  const S1Complex& tgt = out.target.complex();
  const int n = c.truncation;
  Series phi = scale(gen.coefficient(), multiply(multiply(gd.g, block_map, n), gc.inverse, n));
  phi = add(phi, null_homotopic(src, tgt, gen.random_homotopy(src, tgt)));
  const Series h = gen.random_homotopy(src, tgt);
  const Series other = add(phi, null_homotopic(src, tgt, h));
  out.phi = S1Morphism(src, tgt, phi);
  out.homotopic = S1Morphism(src, tgt, other);
  out.homotopy = S1Homotopy{out.homotopic, out.phi, h};
  return out;
}

}  // namespace testsupport

#include "fusion/cohomology.hpp"

namespace fusion {
namespace {

IntMatrix to_dense(const SparseIntMatrix& s) {
  IntMatrix d = IntMatrix::Zero(s.rows(), s.cols());
  for (Eigen::Index i = 0; i < s.outerSize(); ++i)
    for (SparseIntMatrix::InnerIterator it(s, i); it; ++it) d(it.row(), it.col()) = it.value();
  return d;
}

IntVector reduce(IntVector v, const BigInt& m) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) %= m;
    if (v(i) < 0) v(i) += m;
  }
  return v;
}

}  // namespace

HomologyData homology_data(const ChainComplex& K, int n) {
  if (n < 1) throw InvalidArgument("homology degree must be >= 1");
  if (n + 1 > K.max_degree()) throw DegreeMissing("homology in degree n needs the complex to degree n+1");
  HomologyData h;
  h.degree = n;
  const Eigen::Index N = K.rank(n);

  // Z_n = left kernel of ∂_n: the rows of U past the rank
  auto snf = smith_normal_form(to_dense(K.boundary(n)));
  const int r = snf.rank();
  h.cycleBasis = snf.U.bottomRows(N - r);
  const Eigen::Index k = h.cycleBasis.rows();

  const auto& bd = K.boundary(n + 1);
  std::vector<SparseRow> rows;
  for (Eigen::Index i = 0; i < bd.outerSize(); ++i) {
    SparseRow row;
    for (SparseIntMatrix::InnerIterator it(bd, i); it; ++it) row.emplace_back(int(it.col()), it.value());
    if (!row.empty()) rows.push_back(std::move(row));
  }
  h.boundaryBasis = incremental_row_reduce(rows, int(N));

  auto ab = adapted_basis(h.cycleBasis, h.boundaryBasis);
  h.factors = ab.factors;
  h.changeC = ab.change;
  h.changeCinv = ab.changeInverse;
  for (auto& s : h.factors)
    if (s > h.m) h.m = s;

  // K_n over Z_n: all invariant factors are 1, the first k new basis vectors span Z_n
  IntMatrix id = IntMatrix::Zero(N, N);
  for (Eigen::Index i = 0; i < N; ++i) id(i, i) = 1;
  auto kb = adapted_basis(id, h.cycleBasis);
  for (auto& s : kb.factors)
    if (s != 1) throw IntegralityViolation("K_n / Z_n has torsion");
  h.liftR1 = kb.change;
  h.liftR1inv = kb.changeInverse;
  IntMatrix top = kb.newBasis.topRows(k);
  h.liftC1 = lattice_coordinates(h.cycleBasis, top);
  h.projector = IntMatrix::Zero(N, k);
  for (Eigen::Index i = 0; i < k; ++i) h.projector(i, i) = 1;

  for (std::size_t i = 0; i < h.factors.size(); ++i) {
    if (h.factors[i] == 1) continue;
    IntVector bar = IntVector::Zero(k);
    bar(Eigen::Index(i)) = h.m / h.factors[i];
    // values on Z from values on Z' = C Z
    IntVector tilde = reduce(matvec(h.changeCinv, bar), h.m);
    IntVector hat = reduce(matvec(h.liftC1, tilde), h.m);
    IntVector omega_hat = matvec(h.projector, hat);
    h.homVectors.push_back(tilde);
    h.cocycles.push_back(reduce(matvec(h.liftR1inv, omega_hat), h.m));
  }
  return h;
}

}  // namespace fusion

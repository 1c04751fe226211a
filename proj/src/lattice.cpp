#include "zch/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "zch/errors.hpp"

namespace zch {

IntersectionForm::IntersectionForm(IntMat gram) : gram_(std::move(gram)) {
  if (gram_.rows() < 1 || gram_.rows() != gram_.cols())
    throw DimensionMismatch("intersection form must be square of rank >= 1");
  for (Eigen::Index i = 0; i < gram_.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (gram_(i, j) != gram_(j, i))
        throw PreconditionViolation("gram matrix is not symmetric at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
}

namespace {

void check_length(Eigen::Index len, const IntersectionForm& form) {
  if (len != form.rank())
    throw DimensionMismatch("vector length " + std::to_string(len) +
                            " does not match form rank " +
                            std::to_string(form.rank()));
}

}  // namespace

Rat pair(const RatVec& v, const RatVec& w, const IntersectionForm& form) {
  check_length(v.size(), form);
  check_length(w.size(), form);
  Rat acc = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rat row = 0;
    for (Eigen::Index j = 0; j < w.size(); ++j)
      if (w[j] != 0) row += Rat(form.gram()(i, j)) * w[j];
    acc += v[i] * row;
  }
  return acc;
}

Int pair(const IntVec& v, const IntVec& w, const IntersectionForm& form) {
  check_length(v.size(), form);
  check_length(w.size(), form);
  Int acc = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Int row = 0;
    for (Eigen::Index j = 0; j < w.size(); ++j)
      if (w[j] != 0) row += form.gram()(i, j) * w[j];
    acc += v[i] * row;
  }
  return acc;
}

Rat pair(const RatVec& v, const IntVec& w, const IntersectionForm& form) {
  return pair(v, to_rational(w), form);
}

Int exact_determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square");
  const Eigen::Index n = m.rows();
  IntMat a = m;
  Int prev = 1;
  int swaps = 0;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(k).swap(a.row(p));
      ++swaps;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        // Bareiss: division is exact.
        a(i, j) = num / prev;
      }
    prev = a(k, k);
  }
  Int det = a(n - 1, n - 1);
  return (swaps % 2 == 0) ? det : Int(-det);
}

bool is_negative_definite(const IntMat& gram) {
  const Eigen::Index n = gram.rows();
  for (Eigen::Index k = 1; k <= n; ++k) {
    Int minor = exact_determinant(gram.topLeftCorner(k, k));
    const int expected = (k % 2 == 0) ? 1 : -1;
    if (sign(minor) != expected) return false;
  }
  return true;
}

bool is_negative_definite(const IntersectionForm& form,
                          const std::vector<Eigen::Index>& subset) {
  for (Eigen::Index idx : subset)
    if (idx < 0 || idx >= form.rank())
      throw DimensionMismatch("subset index out of range");
  const Eigen::Index n = static_cast<Eigen::Index>(subset.size());
  if (n == 0) return true;
  IntMat sub(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      sub(i, j) = form.gram()(subset[i], subset[j]);
  return is_negative_definite(sub);
}

Signature signature(const IntMat& gram) {
  RatMat a = to_rational(gram);
  const Eigen::Index n = a.rows();
  Signature sig;
  Eigen::Index i = 0;
  while (i < n) {
    Eigen::Index p = i;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // Zero diagonal block: look for an off-diagonal entry to bring in.
      Eigen::Index qi = -1, qj = -1;
      for (Eigen::Index r = i; r < n && qi < 0; ++r)
        for (Eigen::Index c = r + 1; c < n; ++c)
          if (a(r, c) != 0) {
            qi = r;
            qj = c;
            break;
          }
      if (qi < 0) {
        sig.zero += static_cast<int>(n - i);
        break;
      }
      a.row(qi) += a.row(qj);
      a.col(qi) += a.col(qj);
      p = qi;
    }
    if (p != i) {
      a.row(p).swap(a.row(i));
      a.col(p).swap(a.col(i));
    }
    const Rat pivot = a(i, i);
    for (Eigen::Index r = i + 1; r < n; ++r) {
      if (a(r, i) == 0) continue;
      const Rat f = a(r, i) / pivot;
      for (Eigen::Index c = i; c < n; ++c) a(r, c) -= f * a(i, c);
      for (Eigen::Index c = i; c < n; ++c) a(c, r) = a(r, c);
    }
    if (pivot > 0)
      ++sig.positive;
    else
      ++sig.negative;
    ++i;
  }
  return sig;
}

Signature signature(const IntersectionForm& form) {
  return signature(form.gram());
}

IntMat integer_kernel(const IntMat& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  IntMat a = m;
  IntMat u = IntMat::Identity(cols, cols);
  Eigen::Index r = 0;
  for (Eigen::Index row = 0; row < rows && r < cols; ++row) {
    // Column gcd elimination in this row, over columns >= r.
    for (;;) {
      Eigen::Index cmin = -1;
      for (Eigen::Index c = r; c < cols; ++c) {
        if (a(row, c) == 0) continue;
        if (cmin < 0 || abs(a(row, c)) < abs(a(row, cmin))) cmin = c;
      }
      if (cmin < 0) break;
      bool others = false;
      for (Eigen::Index c = r; c < cols; ++c) {
        if (c == cmin || a(row, c) == 0) continue;
        others = true;
        Int q = a(row, c) / a(row, cmin);  // truncated division
        a.col(c) -= q * a.col(cmin);
        u.col(c) -= q * u.col(cmin);
      }
      if (!others) {
        if (cmin != r) {
          a.col(cmin).swap(a.col(r));
          u.col(cmin).swap(u.col(r));
        }
        ++r;
        break;
      }
    }
  }
  return u.rightCols(cols - r);
}

std::vector<IntVec> orthogonal_complement(const std::vector<IntVec>& vectors,
                                          const IntersectionForm& form) {
  const Eigen::Index n = form.rank();
  const Eigen::Index m = static_cast<Eigen::Index>(vectors.size());
  IntMat stacked(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    check_length(vectors[i].size(), form);
    stacked.row(i) = vectors[i].transpose();
  }
  if (m > 0) {
    // Independence of the inputs, via the rank of the stacked matrix.
    IntMat ker = integer_kernel(stacked);
    if (n - ker.cols() != m)
      throw PreconditionViolation("input vectors are linearly dependent");
  }
  IntMat pairing = stacked * form.gram();
  IntMat ker = integer_kernel(pairing);
  std::vector<IntVec> basis;
  basis.reserve(ker.cols());
  for (Eigen::Index c = 0; c < ker.cols(); ++c) basis.push_back(ker.col(c));
  return basis;
}

std::vector<Int> smith_normal_form_diagonal(IntMat m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Int> diag;
  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    // Locate a minimal nonzero entry in the remaining block.
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j) {
        if (m(i, j) == 0) continue;
        if (pi < 0 || abs(m(i, j)) < abs(m(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    m.row(pi).swap(m.row(t));
    m.col(pj).swap(m.col(t));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Int q = m(i, t) / m(t, t);
        m.row(i) -= q * m.row(t);
        if (m(i, t) != 0) {
          m.row(i).swap(m.row(t));
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Int q = m(t, j) / m(t, t);
        m.col(j) -= q * m.col(t);
        if (m(t, j) != 0) {
          m.col(j).swap(m.col(t));
          clean = false;
        }
      }
      if (clean) {
        // Divisibility of the remaining block by the pivot.
        for (Eigen::Index i = t + 1; i < rows && clean; ++i)
          for (Eigen::Index j = t + 1; j < cols; ++j)
            if (m(i, j) % m(t, t) != 0) {
              m.row(t) += m.row(i);
              clean = false;
              break;
            }
      }
    }
    diag.push_back(abs(m(t, t)));
    ++t;
  }
  while (static_cast<Eigen::Index>(diag.size()) < std::min(rows, cols))
    diag.push_back(0);
  return diag;
}

IntVec reflection(const IntVec& d, const IntVec& root,
                  const IntersectionForm& form) {
  if (pair(root, root, form) != -2)
    throw PreconditionViolation("reflection root must have self-intersection -2");
  return d + pair(d, root, form) * root;
}

bool is_primitive(const IntVec& v) {
  bool nonzero = false;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) nonzero = true;
  if (!nonzero) throw PreconditionViolation("is_primitive: zero vector");
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    if (g == 1) return true;
  }
  return g == 1;
}

namespace {

// Depth-first scan with incremental evaluation of the quadratic form:
// at depth k the accumulator holds q = sum_{i,j<k} v_i g_ij v_j and
// linear[j] = sum_{i<k} v_i g_ij for j >= k.
template <typename Scalar, typename Mat>
bool iso_scan(const Mat& g, long bound, Eigen::Index k, Scalar q,
              std::vector<Scalar>& linear, std::vector<long>& coords,
              IntVec& out) {
  const Eigen::Index n = g.rows();
  if (k == n) {
    if (q != 0) return false;
    bool nonzero = false;
    long gcd_acc = 0;
    for (long c : coords) {
      if (c != 0) nonzero = true;
      gcd_acc = std::gcd(gcd_acc, std::abs(c));
    }
    if (!nonzero || gcd_acc != 1) return false;
    out.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) out[i] = coords[i];
    return true;
  }
  // Values in order 0, 1, -1, 2, -2, ...: small vectors are found first.
  for (long step = 0; step <= 2 * bound; ++step) {
    const long v = (step % 2 == 1) ? (step + 1) / 2 : -step / 2;
    coords[k] = v;
    const Scalar qk = q + Scalar(v) * (Scalar(2) * linear[k] + g(k, k) * Scalar(v));
    if (v != 0)
      for (Eigen::Index j = k + 1; j < n; ++j) linear[j] += Scalar(v) * g(k, j);
    if (iso_scan(g, bound, k + 1, qk, linear, coords, out)) return true;
    if (v != 0)
      for (Eigen::Index j = k + 1; j < n; ++j) linear[j] -= Scalar(v) * g(k, j);
  }
  return false;
}

}  // namespace

std::optional<IntVec> find_isotropic_primitive(const IntersectionForm& form,
                                               long bound) {
  if (bound < 1) throw PreconditionViolation("isotropic search bound must be >= 1");
  const Eigen::Index n = form.rank();
  Int max_entry = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      max_entry = std::max(max_entry, Int(abs(form.gram()(i, j))));
  std::vector<long> coords(n, 0);
  IntVec out;
  // Fast path in machine integers when products cannot overflow.
  const Int overflow_guard = max_entry * bound * bound * n * 4;
  if (overflow_guard.fits_slong_p() &&
      overflow_guard.get_si() < (1L << 60)) {
    Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        g(i, j) = form.gram()(i, j).get_si();
    std::vector<long long> linear(n, 0);
    if (iso_scan<long long>(g, bound, 0, 0, linear, coords, out))
      return out;
    return std::nullopt;
  }
  std::vector<Int> linear(n, Int(0));
  if (iso_scan<Int>(form.gram(), bound, 0, Int(0), linear, coords, out))
    return out;
  return std::nullopt;
}

IntMat restricted_gram(const IntersectionForm& form,
                       const std::vector<IntVec>& vectors) {
  const Eigen::Index n = static_cast<Eigen::Index>(vectors.size());
  IntMat g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = pair(vectors[i], vectors[j], form);
  return g;
}

}  // namespace zch

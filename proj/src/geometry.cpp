#include "polyiso/geometry.hpp"

#include <algorithm>
#include <map>

#include "polyiso/certificate.hpp"
#include "polyiso/errors.hpp"

namespace polyiso {

namespace {

using Matrix = std::vector<RationalVector>;  // row-major

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

Rational squared_distance(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    Rational d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

// Incremental row echelon form for independence tests.
class Echelon {
 public:
  bool add(RationalVector v) {
    reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
    const Rational lead = v[pivot];
    for (auto& x : v) x /= lead;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(RationalVector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational c = v[pivots_[r]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * rows_[r][k];
    }
  }

  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t n_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n_cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational lead = m[row][col];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational c = m[r][col];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= c * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Matrix inverse(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix aug(n);
  for (std::size_t r = 0; r < n; ++r) {
    aug[r] = a[r];
    aug[r].resize(2 * n, Rational(0));
    aug[r][n + r] = 1;
  }
  if (rref(aug, n).size() != n) throw Error("singular matrix");
  Matrix inv(n);
  for (std::size_t r = 0; r < n; ++r) inv[r].assign(aug[r].begin() + static_cast<std::ptrdiff_t>(n), aug[r].end());
  return inv;
}

// Basis of the vectors orthogonal to every vector in `span`.
std::vector<RationalVector> orthogonal_complement(const std::vector<RationalVector>& span, std::size_t dim) {
  Matrix m = span;
  const auto pivots = rref(m, dim);
  std::vector<RationalVector> out;
  for (std::size_t free = 0; free < dim; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    RationalVector y(dim, Rational(0));
    y[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) y[pivots[r]] = -m[r][free];
    out.push_back(std::move(y));
  }
  return out;
}

void check_input(const RationalPointSet& v, const char* name) {
  if (v.points.empty()) throw PreconditionError(std::string(name) + ": empty point set");
  for (const auto& p : v.points)
    if (p.size() != v.dim) throw PreconditionError(std::string(name) + ": point of wrong dimension");
  std::vector<RationalVector> sorted = v.points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError(std::string(name) + ": repeated point");
}

// A point set with a chosen affine basis S (greedy by index) and derived
// data used to prune the search.
struct Prepared {
  const RationalPointSet* set;
  std::vector<std::size_t> basis;       // indices of S
  std::vector<RationalVector> lambda;   // affine coordinates relative to S (length k)
  Matrix gram;                          // affinely invariant inner products
  Matrix dist;                          // squared distances (congruence only)
  std::vector<RationalVector> key;      // per-point sorted invariant rows
};

Prepared prepare(const RationalPointSet& v, bool metric) {
  Prepared p;
  p.set = &v;
  const auto& pts = v.points;
  const std::size_t n = pts.size();
  Echelon ech;
  p.basis.push_back(0);
  for (std::size_t i = 1; i < n; ++i)
    if (ech.add(sub(pts[i], pts[0]))) p.basis.push_back(i);
  const std::size_t k = p.basis.size() - 1;

  // Solve D lambda = x - s0 for every point at once, D = [s_i - s0].
  Matrix aug(v.dim, RationalVector(k + n, Rational(0)));
  for (std::size_t r = 0; r < v.dim; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[r][c] = pts[p.basis[c + 1]][r] - pts[p.basis[0]][r];
    for (std::size_t i = 0; i < n; ++i) aug[r][k + i] = pts[i][r] - pts[p.basis[0]][r];
  }
  const auto piv = rref(aug, k);
  p.lambda.assign(n, RationalVector(k, Rational(0)));
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::size_t i = 0; i < n; ++i) p.lambda[i][piv[r]] = aug[r][k + i];

  // Whitened Gram matrix: centre at the centroid, then use the inverse of
  // the scatter matrix as the inner product. Any affine bijection between
  // the sets preserves it.
  RationalVector mu(k, Rational(0));
  for (const auto& l : p.lambda)
    for (std::size_t c = 0; c < k; ++c) mu[c] += l[c];
  for (auto& x : mu) x /= static_cast<long>(n);
  std::vector<RationalVector> centred(n);
  for (std::size_t i = 0; i < n; ++i) centred[i] = sub(p.lambda[i], mu);
  p.gram.assign(n, RationalVector(n, Rational(0)));
  if (k > 0) {
    Matrix scatter(k, RationalVector(k, Rational(0)));
    for (const auto& y : centred)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) scatter[a][b] += y[a] * y[b];
    const Matrix w = inverse(scatter);
    std::vector<RationalVector> wy(n, RationalVector(k, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) wy[i][a] += w[a][b] * centred[i][b];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) p.gram[i][j] = p.gram[j][i] = dot(centred[i], wy[j]);
  }
  if (metric) {
    p.dist.assign(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) p.dist[i][j] = p.dist[j][i] = squared_distance(pts[i], pts[j]);
  }
  p.key.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector g = p.gram[i];
    std::sort(g.begin(), g.end());
    p.key[i] = std::move(g);
    if (metric) {
      RationalVector d = p.dist[i];
      std::sort(d.begin(), d.end());
      p.key[i].push_back(Rational(-1));  // separator; distances are >= 0
      p.key[i].insert(p.key[i].end(), d.begin(), d.end());
    }
  }
  return p;
}

class AffineSearch {
 public:
  AffineSearch(const RationalPointSet& vp, const RationalPointSet& vq, bool metric)
      : vp_(vp), vq_(vq), metric_(metric), p_(prepare(vp, metric)), q_(prepare(vq, metric)) {
    for (std::size_t i = 0; i < vq.points.size(); ++i) q_index_.emplace(vq.points[i], static_cast<VertexId>(i));
  }

  std::optional<AffineMapCertificate> run() {
    if (p_.basis.size() != q_.basis.size()) return std::nullopt;
    auto sorted_keys = [](std::vector<RationalVector> keys) {
      std::sort(keys.begin(), keys.end());
      return keys;
    };
    if (sorted_keys(p_.key) != sorted_keys(q_.key)) return std::nullopt;
    image_.clear();
    used_.assign(vq_.points.size(), 0);
    if (!extend(0)) return std::nullopt;
    return certificate();
  }

 private:
  bool extend(std::size_t j) {
    const auto& s = p_.basis;
    if (j == s.size()) return accept();
    const std::size_t sj = s[j];
    for (std::size_t t = 0; t < vq_.points.size(); ++t) {
      if (used_[t] || q_.key[t] != p_.key[sj]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) {
        ok = q_.gram[image_[i]][t] == p_.gram[s[i]][sj];
        if (ok && metric_) ok = q_.dist[image_[i]][t] == p_.dist[s[i]][sj];
      }
      if (!ok) continue;
      image_.push_back(t);
      used_[t] = 1;
      if (extend(j + 1)) return true;
      used_[t] = 0;
      image_.pop_back();
    }
    return false;
  }

  // T must be affinely independent, and the map fixed by S -> T must carry
  // VP onto VQ bijectively (and isometrically in the metric case).
  bool accept() {
    const auto& qp = vq_.points;
    Echelon ech;
    for (std::size_t i = 1; i < image_.size(); ++i)
      if (!ech.add(sub(qp[image_[i]], qp[image_[0]]))) return false;

    const std::size_t n = vp_.points.size();
    std::vector<RationalVector> dirs;
    for (std::size_t i = 1; i < image_.size(); ++i) dirs.push_back(sub(qp[image_[i]], qp[image_[0]]));
    map_.assign(n, 0);
    std::vector<char> hit(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      RationalVector y = qp[image_[0]];
      for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t c = 0; c < y.size(); ++c) y[c] += p_.lambda[v][i] * dirs[i][c];
      auto it = q_index_.find(y);
      if (it == q_index_.end() || hit[it->second]) return false;
      hit[it->second] = 1;
      map_[v] = it->second;
    }
    if (metric_)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (p_.dist[a][b] != q_.dist[map_[a]][map_[b]]) return false;
    return true;
  }

  // A = Y X^-1 where X holds the directions of S plus a basis of their
  // orthogonal complement, and Y the directions of T plus the complement
  // basis on the Q side (zero-padded if Q's ambient space is smaller).
  AffineMapCertificate certificate() const {
    const auto& pp = vp_.points;
    const auto& qp = vq_.points;
    const std::size_t dp = vp_.dim, dq = vq_.dim;
    std::vector<RationalVector> xs, ys;
    for (std::size_t i = 1; i < p_.basis.size(); ++i) {
      xs.push_back(sub(pp[p_.basis[i]], pp[p_.basis[0]]));
      ys.push_back(sub(qp[image_[i]], qp[image_[0]]));
    }
    const auto comp_p = orthogonal_complement(xs, dp);
    const auto comp_q = orthogonal_complement(ys, dq);
    for (std::size_t c = 0; c < comp_p.size(); ++c) {
      xs.push_back(comp_p[c]);
      ys.push_back(c < comp_q.size() ? comp_q[c] : RationalVector(dq, Rational(0)));
    }
    // xs are the columns of X; build X row-major and invert.
    Matrix x(dp, RationalVector(dp, Rational(0)));
    for (std::size_t c = 0; c < dp; ++c)
      for (std::size_t r = 0; r < dp; ++r) x[r][c] = xs[c][r];
    const Matrix xinv = inverse(x);

    AffineMapCertificate cert;
    cert.matrix.assign(dq, RationalVector(dp, Rational(0)));
    for (std::size_t r = 0; r < dq; ++r)
      for (std::size_t c = 0; c < dp; ++c)
        for (std::size_t k = 0; k < dp; ++k) cert.matrix[r][c] += ys[k][r] * xinv[k][c];
    cert.translation = qp[image_[0]];
    const RationalVector as0 = [&] {
      RationalVector y(dq, Rational(0));
      for (std::size_t r = 0; r < dq; ++r) y[r] = dot(cert.matrix[r], pp[p_.basis[0]]);
      return y;
    }();
    for (std::size_t r = 0; r < dq; ++r) cert.translation[r] -= as0[r];
    cert.vertex_map = map_;
    return cert;
  }

  const RationalPointSet& vp_;
  const RationalPointSet& vq_;
  bool metric_;
  Prepared p_, q_;
  std::map<RationalVector, VertexId> q_index_;
  std::vector<std::size_t> image_;
  std::vector<char> used_;
  std::vector<VertexId> map_;
};

std::optional<AffineMapCertificate> search(const RationalPointSet& vp, const RationalPointSet& vq, bool metric) {
  check_input(vp, "first point set");
  check_input(vq, "second point set");
  if (vp.points.size() != vq.points.size()) return std::nullopt;
  auto cert = AffineSearch(vp, vq, metric).run();
  if (cert && !(metric ? verify_congruence_certificate(vp, vq, *cert) : verify_affine_certificate(vp, vq, *cert)))
    throw Error("affine certificate failed verification");
  return cert;
}

}  // namespace

RationalVector apply(const AffineMapCertificate& cert, const RationalVector& x) {
  RationalVector y = cert.translation;
  for (std::size_t r = 0; r < y.size(); ++r) y[r] += dot(cert.matrix[r], x);
  return y;
}

std::size_t affine_dimension(const RationalPointSet& v) {
  Echelon ech;
  for (std::size_t i = 1; i < v.points.size(); ++i) ech.add(sub(v.points[i], v.points[0]));
  return ech.rank();
}

std::optional<AffineMapCertificate> affine_iso(const RationalPointSet& vp, const RationalPointSet& vq) {
  return search(vp, vq, false);
}

std::optional<AffineMapCertificate> congruent(const RationalPointSet& vp, const RationalPointSet& vq) {
  return search(vp, vq, true);
}

bool verify_affine_certificate(const RationalPointSet& vp, const RationalPointSet& vq,
                               const AffineMapCertificate& cert) {
  const std::size_t n = vp.points.size();
  if (vq.points.size() != n || cert.vertex_map.size() != n) return false;
  if (cert.matrix.size() != vq.dim || cert.translation.size() != vq.dim) return false;
  for (const auto& row : cert.matrix)
    if (row.size() != vp.dim) return false;
  std::vector<char> hit(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const VertexId w = cert.vertex_map[v];
    if (w >= n || hit[w]) return false;
    hit[w] = 1;
    if (apply(cert, vp.points[v]) != vq.points[w]) return false;
  }
  return true;
}

bool verify_congruence_certificate(const RationalPointSet& vp, const RationalPointSet& vq,
                                   const AffineMapCertificate& cert) {
  if (!verify_affine_certificate(vp, vq, cert)) return false;
  const auto& m = cert.vertex_map;
  for (std::size_t a = 0; a < vp.points.size(); ++a)
    for (std::size_t b = a + 1; b < vp.points.size(); ++b)
      if (squared_distance(vp.points[a], vp.points[b]) != squared_distance(vq.points[m[a]], vq.points[m[b]]))
        return false;
  return true;
}

void projective_iso(const RationalPointSet&, const RationalPointSet&) {
  throw Unsupported("projective isomorphism is not supported");
}

std::string format_affine_certificate(const AffineMapCertificate& cert) {
  std::string out;
  for (const auto& row : cert.matrix) {
    out += "A";
    for (const auto& x : row) out += " " + to_string(x);
    out += "\n";
  }
  out += "b";
  for (const auto& x : cert.translation) out += " " + to_string(x);
  out += "\n";
  out += format_vertex_map(cert.vertex_map);
  return out;
}

}  // namespace polyiso

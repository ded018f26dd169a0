#include "circlehall/gfq.hpp"

#include <map>
#include <mutex>

namespace circlehall {

namespace {

int smallest_prime_factor(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

// Multiply polynomials over F_p, reduce modulo the monic poly `mod` (degree k).
std::vector<int> polymulmod(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& mod, int p) {
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  int k = static_cast<int>(mod.size()) - 1;
  for (int d = static_cast<int>(r.size()) - 1; d >= k; --d) {
    int c = r[static_cast<size_t>(d)];
    if (c == 0) continue;
    for (int j = 0; j <= k; ++j) {
      int& x = r[static_cast<size_t>(d - k + j)];
      x = ((x - c * mod[static_cast<size_t>(j)]) % p + p) % p;
    }
  }
  r.resize(static_cast<size_t>(k), 0);
  return r;
}

bool irreducible(const std::vector<int>& f, int p) {
  // No roots and no factor of degree <= deg/2; brute force over monic factors.
  int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  // trial division by all monic polys of degree 1..k/2
  for (int d = 1; 2 * d <= k; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long t = 0; t < count; ++t) {
      std::vector<int> g(static_cast<size_t>(d) + 1, 0);
      long long tt = t;
      for (int i = 0; i < d; ++i) {
        g[static_cast<size_t>(i)] = static_cast<int>(tt % p);
        tt /= p;
      }
      g[static_cast<size_t>(d)] = 1;
      // remainder of f mod g
      std::vector<int> r = f;
      for (int dd = static_cast<int>(r.size()) - 1; dd >= d; --dd) {
        int c = r[static_cast<size_t>(dd)];
        if (c == 0) continue;
        for (int j = 0; j <= d; ++j) {
          int& x = r[static_cast<size_t>(dd - d + j)];
          x = ((x - c * g[static_cast<size_t>(j)]) % p + p) % p;
        }
      }
      bool zero = true;
      for (int i = 0; i < d; ++i)
        if (r[static_cast<size_t>(i)] != 0) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

bool GFq::is_prime_power(int q) {
  if (q < 2) return false;
  int p = smallest_prime_factor(q);
  int m = q;
  while (m % p == 0) m /= p;
  return m == 1;
}

GFq::GFq(int q) : q_(q) {
  if (!is_prime_power(q)) throw precondition_error("q must be a prime power");
  p_ = smallest_prime_factor(q);
  k_ = 0;
  for (int m = q; m > 1; m /= p_) ++k_;

  add_.resize(static_cast<size_t>(q) * q);
  mul_.resize(static_cast<size_t>(q) * q);
  neg_.resize(static_cast<size_t>(q));
  inv_.resize(static_cast<size_t>(q), 0);

  if (k_ == 1) {
    for (int a = 0; a < q; ++a) {
      neg_[static_cast<size_t>(a)] = static_cast<uint8_t>((q - a) % q);
      for (int b = 0; b < q; ++b) {
        add_[idx(static_cast<uint8_t>(a), static_cast<uint8_t>(b))] = static_cast<uint8_t>((a + b) % q);
        mul_[idx(static_cast<uint8_t>(a), static_cast<uint8_t>(b))] = static_cast<uint8_t>((a * b) % q);
      }
    }
  } else {
    // Element index = base-p digits of its coordinate vector; find an
    // irreducible monic modulus of degree k by search.
    std::vector<int> mod;
    long long count = 1;
    for (int i = 0; i < k_; ++i) count *= p_;
    for (long long t = 0; t < count && mod.empty(); ++t) {
      std::vector<int> f(static_cast<size_t>(k_) + 1, 0);
      long long tt = t;
      for (int i = 0; i < k_; ++i) {
        f[static_cast<size_t>(i)] = static_cast<int>(tt % p_);
        tt /= p_;
      }
      f[static_cast<size_t>(k_)] = 1;
      if (irreducible(f, p_)) mod = f;
    }
    auto digits = [&](int a) {
      std::vector<int> d(static_cast<size_t>(k_));
      for (int i = 0; i < k_; ++i) {
        d[static_cast<size_t>(i)] = a % p_;
        a /= p_;
      }
      return d;
    };
    auto undigits = [&](const std::vector<int>& d) {
      int a = 0;
      for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[static_cast<size_t>(i)];
      return a;
    };
    for (int a = 0; a < q; ++a) {
      auto da = digits(a);
      std::vector<int> na(da);
      for (auto& x : na) x = (p_ - x) % p_;
      neg_[static_cast<size_t>(a)] = static_cast<uint8_t>(undigits(na));
      for (int b = 0; b < q; ++b) {
        auto db = digits(b);
        std::vector<int> s(static_cast<size_t>(k_));
        for (int i = 0; i < k_; ++i) s[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p_;
        add_[idx(static_cast<uint8_t>(a), static_cast<uint8_t>(b))] = static_cast<uint8_t>(undigits(s));
        mul_[idx(static_cast<uint8_t>(a), static_cast<uint8_t>(b))] =
            static_cast<uint8_t>(undigits(polymulmod(da, db, mod, p_)));
      }
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[idx(static_cast<uint8_t>(a), static_cast<uint8_t>(b))] == 1) inv_[static_cast<size_t>(a)] = static_cast<uint8_t>(b);
}

uint8_t GFq::inv(uint8_t a) const {
  if (a == 0) throw precondition_error("inverse of 0 in F_q");
  return inv_[a];
}

const GFq& GFq::get(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GFq>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, std::unique_ptr<GFq>(new GFq(q))).first;
  return *it->second;
}

MatFq MatFq::identity(const GFq& f, int n) {
  MatFq m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatFq MatFq::operator*(const MatFq& o) const {
  MatFq r(*field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      uint8_t aik = at(i, k);
      if (!aik) continue;
      for (int j = 0; j < o.cols_; ++j) {
        uint8_t prod = field_->mul(aik, o.at(k, j));
        if (prod) r.set(i, j, field_->add(r.at(i, j), prod));
      }
    }
  return r;
}

MatFq MatFq::operator+(const MatFq& o) const {
  MatFq r(*field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], o.a_[i]);
  return r;
}

bool MatFq::is_zero() const {
  for (uint8_t x : a_)
    if (x) return false;
  return true;
}

int rref(MatFq& m) {
  const GFq& f = m.field();
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m.at(r, col)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = 0; c < m.cols(); ++c) {
        uint8_t t = m.at(piv, c);
        m.set(piv, c, m.at(rank, c));
        m.set(rank, c, t);
      }
    uint8_t inv = f.inv(m.at(rank, col));
    for (int c = 0; c < m.cols(); ++c) m.set(rank, c, f.mul(inv, m.at(rank, c)));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      uint8_t factor = m.at(r, col);
      if (!factor) continue;
      for (int c = 0; c < m.cols(); ++c)
        m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(rank, c))));
    }
    ++rank;
  }
  return rank;
}

int MatFq::rank() const {
  MatFq copy = *this;
  return rref(copy);
}

MatFq MatFq::null_space() const {
  const GFq& f = *field_;
  MatFq m = *this;
  int rk = rref(m);
  // pivot columns
  std::vector<int> pivot_col(static_cast<size_t>(rk));
  std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
  for (int r = 0, c = 0; r < rk; ++r) {
    while (c < cols_ && !m.at(r, c)) ++c;
    pivot_col[static_cast<size_t>(r)] = c;
    is_pivot[static_cast<size_t>(c)] = true;
  }
  MatFq basis(f, cols_, cols_ - rk);
  int out = 0;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    basis.set(c, out, 1);
    for (int r = 0; r < rk; ++r)
      basis.set(pivot_col[static_cast<size_t>(r)], out, f.neg(m.at(r, c)));
    ++out;
  }
  return basis;
}

bool MatFq::in_row_span(const MatFq& basis, const std::vector<uint8_t>& v) {
  const GFq& f = basis.field();
  MatFq m(f, basis.rows() + 1, basis.cols());
  for (int r = 0; r < basis.rows(); ++r)
    for (int c = 0; c < basis.cols(); ++c) m.set(r, c, basis.at(r, c));
  for (int c = 0; c < basis.cols(); ++c) m.set(basis.rows(), c, v[static_cast<size_t>(c)]);
  return m.rank() == basis.rank();
}

namespace {

// Enumerate RREF matrices with given pivot set over F_q^d.
void subspaces_with_pivots(const GFq& f, int d, const std::vector<int>& pivots,
                           std::vector<MatFq>& out) {
  int k = static_cast<int>(pivots.size());
  // free positions: (row r, col c) with c not a pivot column, c > pivots[r],
  // and c < next pivot's column constraint does not apply in RREF (any c >
  // pivots[r] not a pivot col is free).
  std::vector<std::pair<int, int>> free_pos;
  std::vector<bool> is_pivot(static_cast<size_t>(d), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  for (int r = 0; r < k; ++r)
    for (int c = pivots[static_cast<size_t>(r)] + 1; c < d; ++c)
      if (!is_pivot[static_cast<size_t>(c)]) free_pos.emplace_back(r, c);
  long long count = 1;
  for (size_t i = 0; i < free_pos.size(); ++i) count *= f.q();
  for (long long t = 0; t < count; ++t) {
    MatFq m(f, k, d);
    for (int r = 0; r < k; ++r) m.set(r, pivots[static_cast<size_t>(r)], 1);
    long long tt = t;
    for (auto [r, c] : free_pos) {
      m.set(r, c, static_cast<uint8_t>(tt % f.q()));
      tt /= f.q();
    }
    out.push_back(std::move(m));
  }
}

void pivot_sets(int d, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int c = start; c < d; ++c) {
    cur.push_back(c);
    pivot_sets(d, k, c + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MatFq> subspaces_of_dim(const GFq& f, int d, int k) {
  std::vector<MatFq> out;
  if (k == 0) {
    out.emplace_back(f, 0, d);
    return out;
  }
  std::vector<std::vector<int>> ps;
  std::vector<int> cur;
  pivot_sets(d, k, 0, cur, ps);
  for (auto& p : ps) subspaces_with_pivots(f, d, p, out);
  return out;
}

std::vector<MatFq> all_subspaces(const GFq& f, int d) {
  std::vector<MatFq> out;
  for (int k = 0; k <= d; ++k) {
    auto s = subspaces_of_dim(f, d, k);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

}  // namespace circlehall

#pragma once

// Brute-force finite Coxeter group of rank <= 3 via the geometric reflection
// representation over Q(sqrt d).  Independent of the heap code: lengths,
// reduced-word counts and Bruhat order all come from explicit matrices.

#include "tlcb/coxeter.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Rat = boost::multiprecision::cpp_rational;

// a + b*sqrt(d)
struct Quad {
  Rat a, b;
  bool operator==(const Quad&) const = default;
};

class Group {
 public:
  explicit Group(const tlcb::CoxeterGraph& g) : g_(g), n_(g.rank) {
    d_ = g.family == tlcb::Family::H ? 5 : 2;
    for (int s = 1; s <= n_; ++s) gens_.push_back(reflection(s));
    build();
  }

  int size() const { return static_cast<int>(elems_.size()); }
  int length(int e) const { return len_[e]; }
  /// Element id of a word's product.
  int product(const tlcb::Word& w) const {
    int e = 0;
    for (int s : w) e = mul_gen_[e][s - 1];
    return e;
  }
  int times_gen(int e, int s) const { return mul_gen_[e][s - 1]; }
  bool is_reduced(const tlcb::Word& w) const { return length(product(w)) == static_cast<int>(w.size()); }
  /// Number of reduced expressions of e, by the recursion over right descents.
  long long reduced_word_count(int e) const { return nred_[e]; }
  /// One reduced expression of e (greedy right descents).
  tlcb::Word some_reduced_word(int e) const {
    tlcb::Word w;
    while (len_[e] > 0) {
      for (int s = 1; s <= n_; ++s) {
        int f = mul_gen_[e][s - 1];
        if (len_[f] < len_[e]) {
          w.insert(w.begin(), s);
          e = f;
          break;
        }
      }
    }
    return w;
  }
  /// Lower Bruhat interval of y as the set of products of all subwords of a
  /// reduced expression.
  std::set<int> bruhat_below(const tlcb::Word& y_reduced) const {
    std::set<int> cur{0};
    for (int s : y_reduced) {
      std::set<int> next = cur;
      for (int e : cur) next.insert(mul_gen_[e][s - 1]);
      cur = std::move(next);
    }
    return cur;
  }

 private:
  using Mat = std::vector<Quad>;  // n*n row-major

  Quad two_cos(int m) const {
    switch (m) {
      case 2: return {0, 0};
      case 3: return {1, 0};
      case 4: return {0, 1};             // sqrt 2
      case 5: return {Rat(1, 2), Rat(1, 2)};  // (1 + sqrt 5)/2
    }
    return {0, 0};
  }

  Quad add(const Quad& x, const Quad& y) const { return {x.a + y.a, x.b + y.b}; }
  Quad mul(const Quad& x, const Quad& y) const { return {x.a * y.a + x.b * y.b * d_, x.a * y.b + x.b * y.a}; }

  Mat reflection(int s) const {
    // s(alpha_j) = alpha_j + 2cos(pi/m_sj) alpha_s; columns are images.
    Mat m(static_cast<std::size_t>(n_ * n_), Quad{0, 0});
    for (int j = 1; j <= n_; ++j) {
      m[static_cast<std::size_t>((j - 1) * n_ + (j - 1))] = {1, 0};
      if (j == s) {
        m[static_cast<std::size_t>((s - 1) * n_ + (j - 1))] = {-1, 0};
      } else {
        auto& c = m[static_cast<std::size_t>((s - 1) * n_ + (j - 1))];
        c = add(c, two_cos(g_.m(s, j)));
      }
    }
    return m;
  }

  Mat matmul(const Mat& x, const Mat& y) const {
    Mat r(static_cast<std::size_t>(n_ * n_), Quad{0, 0});
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const Quad& xik = x[static_cast<std::size_t>(i * n_ + k)];
        if (xik.a == 0 && xik.b == 0) continue;
        for (int j = 0; j < n_; ++j) {
          auto& dst = r[static_cast<std::size_t>(i * n_ + j)];
          dst = add(dst, mul(xik, y[static_cast<std::size_t>(k * n_ + j)]));
        }
      }
    return r;
  }

  static std::string key(const Mat& m) {
    std::string k;
    for (const auto& q : m) k += q.a.str() + ":" + q.b.str() + ";";
    return k;
  }

  void build() {
    Mat id(static_cast<std::size_t>(n_ * n_), Quad{0, 0});
    for (int i = 0; i < n_; ++i) id[static_cast<std::size_t>(i * n_ + i)] = {1, 0};
    std::map<std::string, int> index;
    elems_.push_back(id);
    len_.push_back(0);
    index[key(id)] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int e = queue.front();
      queue.pop_front();
      for (int s = 1; s <= n_; ++s) {
        Mat p = matmul(elems_[static_cast<std::size_t>(e)], gens_[static_cast<std::size_t>(s - 1)]);
        auto k = key(p);
        if (!index.count(k)) {
          index[k] = static_cast<int>(elems_.size());
          elems_.push_back(p);
          len_.push_back(len_[e] + 1);
          queue.push_back(index[k]);
          if (elems_.size() > 20000) throw std::runtime_error("group oracle: group too large");
        }
      }
    }
    mul_gen_.assign(elems_.size(), std::vector<int>(static_cast<std::size_t>(n_)));
    for (std::size_t e = 0; e < elems_.size(); ++e)
      for (int s = 1; s <= n_; ++s)
        mul_gen_[e][static_cast<std::size_t>(s - 1)] = index.at(key(matmul(elems_[e], gens_[static_cast<std::size_t>(s - 1)])));
    // BFS order is length order, so predecessors are ready.
    nred_.assign(elems_.size(), 0);
    nred_[0] = 1;
    for (std::size_t e = 1; e < elems_.size(); ++e)
      for (int s = 1; s <= n_; ++s) {
        int f = mul_gen_[e][static_cast<std::size_t>(s - 1)];
        if (len_[f] < len_[e]) nred_[e] += nred_[f];
      }
  }

  tlcb::CoxeterGraph g_;
  int n_;
  int d_;
  std::vector<Mat> gens_;
  std::vector<Mat> elems_;
  std::vector<int> len_;
  std::vector<std::vector<int>> mul_gen_;
  std::vector<long long> nred_;
};

}  // namespace oracle

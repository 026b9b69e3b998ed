#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polystab {

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { validate(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

  void validate() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
      if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  int size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const { return i < length() ? parts[i] : 0; }  // zero-padded access

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s;
  }
};

inline Partition partition_from_string(const std::string& s) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.empty()) throw std::invalid_argument("empty partition part");
    parts.push_back(std::stoi(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return Partition(parts);
}

// lambda \ mu with inner contained in outer part-wise.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    for (int i = 0; i < inner.length(); ++i)
      if (inner.part(i) > outer.part(i)) throw std::invalid_argument("inner shape not contained in outer");
  }

  int box_count() const { return outer.size() - inner.size(); }
};

// Aitken-Feit determinant. The prefactor is the box count factorial (the
// determinant body is |lambda \ mu|-homogeneous of weight -1 in factorials;
// a brute-force tableau count pins the prefactor to k!, not N!).
inline mpz_class skew_syt_count(const SkewShape& shape) {
  int n = shape.outer.length();
  if (n == 0) return 1;
  auto inv_fact = [](int v) -> mpq_class {
    if (v < 0) return 0;
    mpz_class f = 1;
    for (int i = 2; i <= v; ++i) f *= i;
    return mpq_class(1) / mpq_class(f);
  };
  // det over Q by fraction-free-enough Gaussian elimination
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[i][j] = inv_fact(shape.outer.part(i) - shape.inner.part(j) - i + j);
  mpq_class det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      mpq_class f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  mpz_class kfact = 1;
  for (int i = 2; i <= shape.box_count(); ++i) kfact *= i;
  mpq_class count = det * mpq_class(kfact);
  if (count.get_den() != 1 || count < 0) throw std::logic_error("tableau count is not a non-negative integer");
  return count.get_num();
}

// Partitions mu with mu = nu plus one box (Pieri with s_(1)).
inline std::vector<Partition> add_one_box(const Partition& nu) {
  std::vector<Partition> out;
  int l = nu.length();
  for (int i = 0; i <= l; ++i) {
    if (i == 0 || nu.part(i) < nu.part(i - 1)) {
      std::vector<int> parts = nu.parts;
      if (i == l) parts.push_back(1);
      else ++parts[i];
      out.emplace_back(parts);
    }
  }
  return out;
}

// Boxes removable from lambda (row index i, 0-based) leaving a partition.
inline std::vector<std::pair<int, Partition>> removable_boxes(const Partition& lambda) {
  std::vector<std::pair<int, Partition>> out;
  int l = lambda.length();
  for (int i = 0; i < l; ++i) {
    if (i + 1 < l && lambda.parts[i] == lambda.parts[i + 1]) continue;
    std::vector<int> parts = lambda.parts;
    --parts[i];
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    out.emplace_back(i, Partition(parts));
  }
  return out;
}

inline std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxPart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxPart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

}  // namespace polystab

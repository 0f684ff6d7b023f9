#include "wfatlas/constructors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <variant>

#include "wfatlas/divisors.hpp"
#include "wfatlas/error.hpp"
#include "wfatlas/parallel.hpp"

namespace wfatlas {

namespace {

std::string join(const std::vector<int>& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  out << '}';
  return out.str();
}

IntVector unit(std::size_t dim, std::size_t i) {
  IntVector e(dim);
  e[i] = 1;
  return e;
}

IndexSet range(int begin, int end) {
  IndexSet out(static_cast<std::size_t>(end - begin));
  std::iota(out.begin(), out.end(), begin);
  return out;
}

// Maximal cones omitting exactly one ray from each group.
std::vector<IndexSet> cones_omitting_one_per_group(const std::vector<IndexSet>& groups, int n) {
  std::vector<IndexSet> cones;
  std::function<void(std::size_t, RayMask)> rec = [&](std::size_t g, RayMask omitted) {
    if (g == groups.size()) {
      IndexSet cone;
      for (int i = 0; i < n; ++i)
        if (!(omitted >> i & 1)) cone.push_back(i);
      cones.push_back(std::move(cone));
      return;
    }
    for (int i : groups[g]) rec(g + 1, omitted | RayMask{1} << i);
  };
  rec(0, 0);
  return cones;
}

bool nondecreasing_nonnegative(const std::vector<int>& xs) {
  return std::is_sorted(xs.begin(), xs.end()) &&
         std::all_of(xs.begin(), xs.end(), [](int x) { return x >= 0; });
}

void validate(const KleinschmidtParams& p) {
  if (p.a.empty() || p.r() < 1)
    throw Error("kleinschmidt parameters need 1 <= |a| <= d' - 1: " + to_string(p));
  if (!nondecreasing_nonnegative(p.a))
    throw Error("kleinschmidt a must be nondecreasing and nonnegative: " + to_string(p));
}

void validate(const ProjectiveBundleParams& p) {
  validate(KleinschmidtParams{p.d_prime, p.a});
  if (p.pairs.empty()) throw Error("projective bundle needs at least one pair: " + to_string(p));
  if (!std::is_sorted(p.pairs.begin(), p.pairs.end()))
    throw Error("projective bundle pairs must be sorted: " + to_string(p));
  for (const auto& [b, c] : p.pairs)
    if (b < 0) throw Error("projective bundle b_i must be nonnegative: " + to_string(p));
}

void validate(const BatyrevParams& p) {
  for (int pi : p.p)
    if (pi < 1) throw Error("batyrev partition entries must be positive: " + to_string(p));
  if (p.b.size() != static_cast<std::size_t>(p.p[3]))
    throw Error("batyrev b must have p_3 entries: " + to_string(p));
  if (p.c.size() != static_cast<std::size_t>(p.p[2] - 1))
    throw Error("batyrev c must have p_2 - 1 entries: " + to_string(p));
  if (!nondecreasing_nonnegative(p.b) || !nondecreasing_nonnegative(p.c))
    throw Error("batyrev b and c must be nondecreasing and nonnegative: " + to_string(p));
}

// Nested integer lists: "(2, {0}, {{1, 1}})" or "{1,1,1,1,1};{0};{}".
struct Node {
  std::variant<long, std::vector<Node>> value;
  bool is_list() const { return value.index() == 1; }
  long number() const {
    if (is_list()) throw Error("expected an integer");
    return std::get<long>(value);
  }
  const std::vector<Node>& items() const {
    if (!is_list()) throw Error("expected a list");
    return std::get<std::vector<Node>>(value);
  }
};

class NestedParser {
 public:
  explicit NestedParser(const std::string& text) : text_(text) {}

  std::vector<Node> parse_top() {
    std::vector<Node> items = parse_items('\0');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    if (items.size() == 1 && items[0].is_list() && wrapped_) return items[0].items();
    return items;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("cannot parse parameters '" + text_ + "': " + what);
  }

  std::vector<Node> parse_items(char close) {
    std::vector<Node> items;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == close) return items;
    while (true) {
      items.push_back(parse_node());
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == ',' || text_[pos_] == ';')) {
        ++pos_;
        continue;
      }
      return items;
    }
  }

  Node parse_node() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char ch = text_[pos_];
    if (ch == '{' || ch == '(') {
      const char close = ch == '{' ? '}' : ')';
      if (pos_ == 0 && ch == '(') wrapped_ = true;
      ++pos_;
      Node node{parse_items(close)};
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != close) fail("unbalanced brackets");
      ++pos_;
      return node;
    }
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(text_.substr(pos_), &used);
    } catch (const std::exception&) {
      fail("expected an integer");
    }
    pos_ += used;
    return Node{value};
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  bool wrapped_ = false;
};

std::vector<int> int_list(const Node& node) {
  std::vector<int> out;
  for (const auto& item : node.items()) out.push_back(static_cast<int>(item.number()));
  return out;
}

std::vector<Integer> zeros(std::size_t n) { return std::vector<Integer>(n, 0); }

}  // namespace

std::string to_string(const KleinschmidtParams& p) {
  return "(" + std::to_string(p.d_prime) + ", " + join(p.a) + ")";
}

std::string to_string(const ProjectiveBundleParams& p) {
  std::ostringstream out;
  out << '(' << p.d_prime << ", " << join(p.a) << ", {";
  for (std::size_t i = 0; i < p.pairs.size(); ++i)
    out << (i ? ", " : "") << '{' << p.pairs[i].first << ", " << p.pairs[i].second << '}';
  out << "})";
  return out.str();
}

std::string to_string(const BatyrevParams& p) {
  return "(" + join(std::vector<int>(p.p.begin(), p.p.end())) + ", " + join(p.b) + ", " +
         join(p.c) + ")";
}

KleinschmidtParams parse_kleinschmidt(const std::string& text) {
  const auto items = NestedParser(text).parse_top();
  if (items.size() != 2) throw Error("kleinschmidt parameters are (d, {a...}): " + text);
  return {static_cast<int>(items[0].number()), int_list(items[1])};
}

ProjectiveBundleParams parse_projective_bundle(const std::string& text) {
  const auto items = NestedParser(text).parse_top();
  if (items.size() != 3)
    throw Error("projective bundle parameters are (d', {a...}, {{b, c}...}): " + text);
  ProjectiveBundleParams p{static_cast<int>(items[0].number()), int_list(items[1]), {}};
  for (const auto& pair : items[2].items()) {
    const auto bc = int_list(pair);
    if (bc.size() != 2) throw Error("projective bundle pairs have two entries: " + text);
    p.pairs.emplace_back(bc[0], bc[1]);
  }
  return p;
}

BatyrevParams parse_batyrev(const std::string& text) {
  const auto items = NestedParser(text).parse_top();
  if (items.size() != 3) throw Error("batyrev parameters are ({p...}, {b...}, {c...}): " + text);
  const auto p = int_list(items[0]);
  if (p.size() != 5) throw Error("batyrev partition has five parts: " + text);
  BatyrevParams out;
  std::copy(p.begin(), p.end(), out.p.begin());
  out.b = int_list(items[1]);
  out.c = int_list(items[2]);
  return out;
}

std::vector<IndexSet> kleinschmidt_groups(const KleinschmidtParams& p) {
  const int s = static_cast<int>(p.a.size());
  return {range(0, s + 1), range(s + 1, p.d_prime + 2)};
}

Fan kleinschmidt(const KleinschmidtParams& p) {
  validate(p);
  const int s = static_cast<int>(p.a.size());
  const int r = p.r();
  const std::size_t d = static_cast<std::size_t>(p.d_prime);
  std::vector<IntVector> rays;
  IntVector x_last(d);
  for (int i = 0; i < s; ++i) x_last[i] = -1;
  rays.push_back(x_last);
  for (int i = 0; i < s; ++i) rays.push_back(unit(d, i));
  for (int j = 0; j < r; ++j) rays.push_back(unit(d, s + j));
  IntVector y_last(d);
  for (int i = 0; i < s; ++i) y_last[i] = p.a[i];
  for (int j = 0; j < r; ++j) y_last[s + j] = -1;
  rays.push_back(y_last);
  const auto groups = kleinschmidt_groups(p);
  return make_fan(d, std::move(rays), cones_omitting_one_per_group(groups, p.d_prime + 2));
}

KleinschmidtParams identify_kleinschmidt(const Fan& fan) {
  if (!fan.is_smooth() || !fan.is_complete() || picard_rank(fan) != 2)
    throw Error("not a smooth complete fan of Picard rank 2");
  const auto& rels = fan.primitive_relations();
  if (rels.size() != 2) throw InternalError("Picard rank 2 fan without two primitive collections");
  const int d = static_cast<int>(fan.dim());
  if (rels[0].sigma.empty() && rels[1].sigma.empty()) {
    const std::size_t fiber = std::min(rels[0].collection.size(), rels[1].collection.size());
    return {d, std::vector<int>(fiber - 1, 0)};
  }
  // 𝒳 sums to zero; the other relation is written on 𝒳.
  const auto& x = rels[0].sigma.empty() ? rels[0] : rels[1];
  const auto& y = rels[0].sigma.empty() ? rels[1] : rels[0];
  if (!x.sigma.empty()) throw InternalError("Picard rank 2 fan with two nonzero relations");
  std::vector<int> a;
  for (int r : x.collection) a.push_back(static_cast<int>(y.relation_vector[r] * -1));
  std::sort(a.begin(), a.end());
  if (a.front() != 0) throw InternalError("Kleinschmidt relation covers all of 𝒳");
  a.erase(a.begin());
  return {d, a};
}

std::vector<std::vector<Integer>> kleinschmidt_expected_relations(const KleinschmidtParams& p) {
  const auto groups = kleinschmidt_groups(p);
  const std::size_t n = static_cast<std::size_t>(p.d_prime + 2);
  auto rx = zeros(n), ry = zeros(n);
  for (int i : groups[0]) rx[i] = 1;
  for (int i : groups[1]) ry[i] = 1;
  for (std::size_t i = 0; i < p.a.size(); ++i) ry[i + 1] -= p.a[i];
  return {rx, ry};
}

std::vector<IndexSet> projective_bundle_groups(const ProjectiveBundleParams& p) {
  const int s = static_cast<int>(p.a.size());
  const int k = static_cast<int>(p.pairs.size());
  return {range(0, s + 1), range(s + 1, p.d_prime + 2), range(p.d_prime + 2, p.d_prime + k + 3)};
}

Fan projective_bundle(const ProjectiveBundleParams& p) {
  validate(p);
  const int s = static_cast<int>(p.a.size());
  const int r = p.d_prime - s;
  const int k = static_cast<int>(p.pairs.size());
  const std::size_t d = static_cast<std::size_t>(p.dim());
  std::vector<IntVector> rays;
  IntVector x_last(d);
  for (int i = 0; i < s; ++i) x_last[i] = -1;
  for (int i = 0; i < k; ++i) x_last[p.d_prime + i] = p.pairs[i].first;
  rays.push_back(x_last);
  for (int i = 0; i < s; ++i) rays.push_back(unit(d, i));
  for (int j = 0; j < r; ++j) rays.push_back(unit(d, s + j));
  IntVector y_last(d);
  for (int i = 0; i < s; ++i) y_last[i] = p.a[i];
  for (int j = 0; j < r; ++j) y_last[s + j] = -1;
  for (int i = 0; i < k; ++i) y_last[p.d_prime + i] = p.pairs[i].second;
  rays.push_back(y_last);
  for (int i = 0; i < k; ++i) rays.push_back(unit(d, p.d_prime + i));
  IntVector z_last(d);
  for (int i = 0; i < k; ++i) z_last[p.d_prime + i] = -1;
  rays.push_back(z_last);
  const auto groups = projective_bundle_groups(p);
  return make_fan(d, std::move(rays), cones_omitting_one_per_group(groups, p.dim() + 3));
}

std::vector<std::vector<Integer>> projective_bundle_expected_relations(
    const ProjectiveBundleParams& p) {
  const auto groups = projective_bundle_groups(p);
  const std::size_t n = static_cast<std::size_t>(p.dim() + 3);
  const int k = static_cast<int>(p.pairs.size());
  const int z0 = groups[2].front();
  auto rx = zeros(n), ry = zeros(n), rz = zeros(n);
  for (int i : groups[0]) rx[i] = 1;
  for (int i : groups[1]) ry[i] = 1;
  for (int i : groups[2]) rz[i] = 1;
  for (int i = 0; i < k; ++i) rx[z0 + i] -= p.pairs[i].first;
  for (std::size_t i = 0; i < p.a.size(); ++i) ry[i + 1] -= p.a[i];
  int cl = 0;
  for (const auto& [b, c] : p.pairs) cl = std::min(cl, c);
  // cl = 0 when every c_i ≥ 0, which reduces to the plain relation.
  ry[z0 + k] -= -cl;
  for (int i = 0; i < k; ++i) ry[z0 + i] -= p.pairs[i].second - cl;
  return {rx, ry, rz};
}

std::vector<IndexSet> batyrev_groups(const BatyrevParams& p) {
  std::vector<IndexSet> groups;
  int start = 0;
  for (int size : p.p) {
    groups.push_back(range(start, start + size));
    start += size;
  }
  return groups;
}

std::vector<std::vector<Integer>> batyrev_expected_relations(const BatyrevParams& p) {
  const auto g = batyrev_groups(p);
  const std::size_t n = static_cast<std::size_t>(p.dim() + 3);
  std::vector<std::vector<Integer>> rels(5, zeros(n));
  for (int i = 0; i < 5; ++i) {
    for (int ray : g[i]) rels[i][ray] += 1;
    for (int ray : g[(i + 1) % 5]) rels[i][ray] += 1;
  }
  // P_0: c_i z_i + (b_i + 1) t_i. P_1: u. P_3: y. P_4: c_i z_i + b_i t_i.
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    rels[0][g[2][i + 1]] -= p.c[i];
    rels[4][g[2][i + 1]] -= p.c[i];
  }
  for (std::size_t i = 0; i < p.b.size(); ++i) {
    rels[0][g[3][i]] -= p.b[i] + 1;
    rels[4][g[3][i]] -= p.b[i];
  }
  for (int ray : g[4]) rels[1][ray] -= 1;
  for (int ray : g[1]) rels[3][ray] -= 1;
  return rels;
}

Fan batyrev(const BatyrevParams& p) {
  validate(p);
  const std::size_t d = static_cast<std::size_t>(p.dim());
  const int p0 = p.p[0], p1 = p.p[1], p2 = p.p[2], p3 = p.p[3], p4 = p.p[4];
  // Standard basis order: v_1..v_p0, y_2..y_p1, z_2..z_p2, t_1..t_p3, u_2..u_p4.
  const int y2 = p0, z2 = y2 + p1 - 1, t1 = z2 + p2 - 1, u2 = t1 + p3;
  std::vector<IntVector> v, y(1), z(1), t, u(1);
  for (int i = 0; i < p0; ++i) v.push_back(unit(d, i));
  for (int i = 0; i < p1 - 1; ++i) y.push_back(unit(d, y2 + i));
  for (int i = 0; i < p2 - 1; ++i) z.push_back(unit(d, z2 + i));
  for (int i = 0; i < p3; ++i) t.push_back(unit(d, t1 + i));
  for (int i = 0; i < p4 - 1; ++i) u.push_back(unit(d, u2 + i));

  IntVector acc(d);
  for (int i = 1; i < p2; ++i) acc = subtract(acc, z[i]);
  for (const auto& ti : t) acc = subtract(acc, ti);
  z[0] = acc;

  acc = IntVector(d);
  for (int i = 1; i < p4; ++i) acc = subtract(acc, u[i]);
  for (const auto& vi : v) acc = subtract(acc, vi);
  for (int i = 1; i < p2; ++i) acc = add(acc, scaled(z[i], p.c[i - 1]));
  for (int i = 0; i < p3; ++i) acc = add(acc, scaled(t[i], p.b[i]));
  u[0] = acc;

  acc = IntVector(d);
  for (int i = 1; i < p1; ++i) acc = subtract(acc, y[i]);
  for (const auto& zi : z) acc = subtract(acc, zi);
  for (const auto& ui : u) acc = add(acc, ui);
  y[0] = acc;

  std::vector<IntVector> rays;
  for (auto* group : {&v, &y, &z, &t, &u}) rays.insert(rays.end(), group->begin(), group->end());

  const auto groups = batyrev_groups(p);
  std::vector<RayMask> collections;
  for (int i = 0; i < 5; ++i)
    collections.push_back(to_mask(groups[i]) | to_mask(groups[(i + 1) % 5]));
  const int n = static_cast<int>(rays.size());
  std::vector<IndexSet> cones;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const RayMask omitted = RayMask{1} << a | RayMask{1} << b | RayMask{1} << c;
        if (std::all_of(collections.begin(), collections.end(),
                        [&](RayMask pc) { return (pc & omitted) != 0; })) {
          IndexSet cone;
          for (int i = 0; i < n; ++i)
            if (!(omitted >> i & 1)) cone.push_back(i);
          cones.push_back(std::move(cone));
        }
      }

  Fan fan = make_fan(d, std::move(rays), std::move(cones));
  if (!fan.is_smooth() || !fan.is_complete())
    throw InternalError("batyrev fan " + to_string(p) + " is not smooth and complete");
  const auto expected = batyrev_expected_relations(p);
  const auto& rels = fan.primitive_relations();
  if (rels.size() != 5) throw InternalError("batyrev fan " + to_string(p) + " lacks 5 collections");
  for (int i = 0; i < 5; ++i) {
    const IndexSet pc = from_mask(collections[i]);
    const auto it = std::find_if(rels.begin(), rels.end(),
                                 [&](const auto& r) { return r.collection == pc; });
    if (it == rels.end() || it->relation_vector != expected[i])
      throw InternalError("batyrev fan " + to_string(p) + " has an unexpected relation for P_" +
                          std::to_string(i));
  }
  return fan;
}

namespace {

// Nondecreasing sequences of length len with entries in [lo, hi] and sum ≤ max_sum.
void nondecreasing_sequences(int len, int lo, int hi, int max_sum,
                             const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> seq;
  std::function<void(int, int)> rec = [&](int from, int sum) {
    if (static_cast<int>(seq.size()) == len) {
      emit(seq);
      return;
    }
    const int remaining = len - static_cast<int>(seq.size());
    for (int x = from; x <= hi; ++x) {
      // With x ≥ 0 the remaining entries cannot lower the sum.
      if (x >= 0 && sum + x * remaining > max_sum) break;
      seq.push_back(x);
      rec(x, sum + x);
      seq.pop_back();
    }
  };
  rec(lo, 0);
}

template <typename Params, typename Build>
std::vector<Candidate<Params>> build_all(const std::vector<Params>& params, Build build) {
  std::vector<std::optional<Fan>> fans(params.size());
  parallel_for(params.size(), [&](std::size_t i) { fans[i] = build(params[i]); });
  std::vector<Candidate<Params>> out;
  for (std::size_t i = 0; i < params.size(); ++i)
    if (fans[i]) out.push_back({params[i], std::move(*fans[i])});
  return out;
}

}  // namespace

std::vector<Candidate<KleinschmidtParams>> enumerate_kleinschmidt_weak_fano(int d) {
  if (d < 2) throw Error("kleinschmidt enumeration needs d >= 2");
  std::vector<KleinschmidtParams> params;
  for (int r = 1; r < d; ++r) {
    const int s = d - r;
    nondecreasing_sequences(s, 0, r + 1, r + 1, [&](const std::vector<int>& a) {
      const bool all_zero = std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
      // P^r × P^s is listed once, with the shorter a.
      if (all_zero && s > r) return;
      params.push_back({d, a});
    });
  }
  std::sort(params.begin(), params.end(), [](const auto& x, const auto& y) {
    return std::pair(x.a.size(), x.a) < std::pair(y.a.size(), y.a);
  });
  auto out = build_all(params, [](const KleinschmidtParams& p) -> std::optional<Fan> {
    Fan fan = kleinschmidt(p);
    if (!is_weak_fano(fan))
      throw InternalError("kleinschmidt " + to_string(p) + " fails the degree test");
    return fan;
  });
  return out;
}

std::vector<Candidate<ProjectiveBundleParams>> enumerate_projective_bundles_weak_fano(int d) {
  if (d < 3) throw Error("projective bundle enumeration needs d >= 3");
  std::vector<ProjectiveBundleParams> params;
  for (int dp = 2; dp < d; ++dp) {
    const int k = d - dp;
    for (const auto& base : enumerate_kleinschmidt_weak_fano(dp)) {
      const int s = static_cast<int>(base.params.a.size());
      const int r = base.params.r();
      const int sum_a = std::accumulate(base.params.a.begin(), base.params.a.end(), 0);
      std::vector<std::pair<int, int>> grid;
      for (int b = 0; b <= s + 1; ++b)
        for (int c = -(r + 1); c <= r + 1; ++c) grid.emplace_back(b, c);
      // Sorted multisets of k grid points.
      std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
      while (true) {
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i : idx) pairs.push_back(grid[i]);
        int sum_b = 0, sum_c = 0, cl = 0;
        for (const auto& [b, c] : pairs) {
          sum_b += b;
          sum_c += c;
          cl = std::min(cl, c);
        }
        // Necessary conditions; cl = 0 covers the case where every c_i ≥ 0.
        const int y_bound = (r + 1) - sum_a + cl - (sum_c - k * cl);
        if (sum_b <= s + 1 && y_bound >= 0) params.push_back({dp, base.params.a, pairs});
        int pos = k - 1;
        while (pos >= 0 && idx[pos] + 1 == grid.size()) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[pos];
      }
    }
  }
  auto key = [](const ProjectiveBundleParams& p) {
    std::vector<int> bs, cs;
    for (const auto& [b, c] : p.pairs) {
      bs.push_back(b);
      cs.push_back(c);
    }
    return std::tuple(p.d_prime, p.a.size(), p.a, bs, cs);
  };
  std::sort(params.begin(), params.end(),
            [&](const auto& x, const auto& y) { return key(x) < key(y); });
  return build_all(params, [](const ProjectiveBundleParams& p) -> std::optional<Fan> {
    Fan fan = projective_bundle(p);
    if (!is_weak_fano(fan)) return std::nullopt;
    return fan;
  });
}

std::vector<Candidate<BatyrevParams>> enumerate_batyrev_weak_fano(int d) {
  if (d < 2) throw Error("batyrev enumeration needs d >= 2");
  std::vector<BatyrevParams> params;
  const int n = d + 3;
  std::array<int, 5> p{};
  std::function<void(int, int)> compose = [&](int i, int left) {
    if (i == 4) {
      p[4] = left;
      if (p[1] + p[2] - p[4] < 0 || p[3] + p[4] - p[1] < 0) return;
      const int bound = std::min(p[0] + p[1] - p[3], p[0] + p[4]);
      if (bound < 0) return;
      nondecreasing_sequences(p[3], 0, bound, bound, [&](const std::vector<int>& b) {
        const int sum_b = std::accumulate(b.begin(), b.end(), 0);
        nondecreasing_sequences(p[2] - 1, 0, bound, bound - sum_b, [&](const std::vector<int>& c) {
          const bool zero = std::all_of(b.begin(), b.end(), [](int x) { return x == 0; }) &&
                            std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
          if (zero && std::pair(p[0], p[3]) > std::pair(p[2], p[4])) return;
          params.push_back({p, b, c});
        });
      });
      return;
    }
    for (int x = 1; x <= left - (4 - i); ++x) {
      p[i] = x;
      compose(i + 1, left - x);
    }
  };
  compose(0, n);
  std::sort(params.begin(), params.end());
  return build_all(params, [](const BatyrevParams& p) -> std::optional<Fan> {
    Fan fan = batyrev(p);
    if (!is_weak_fano(fan))
      throw InternalError("batyrev " + to_string(p) + " passes the inequalities but not the degree test");
    return fan;
  });
}

}  // namespace wfatlas

#include "mono/cover.hpp"

#include <algorithm>
#include <map>

namespace mono {

namespace {

// Directed traversal of one spine half-arc; dir +1 runs fiber -> ramification.
struct Step {
  int edge;
  int dir;
};

using Walk = std::vector<Step>;

struct Graph {
  int n = 0, d = 0;
  std::vector<std::pair<int, int>> supports;  // 0-based sheets per branch point

  int fiber_end(int edge) const {
    const auto& [a, b] = supports[edge / 2];
    return edge % 2 == 0 ? a : b;
  }
  int ram_vertex(int edge) const { return n + edge / 2; }

  // Counterclockwise half-edge order around a vertex. At a fiber vertex the
  // arc to branch point j sits at a smaller angle for larger j (basepoint
  // below the real axis), so the ccw order is j descending. A ramification
  // vertex has exactly two half-edges.
  std::vector<int> ccw_edges(int v) const {
    std::vector<int> out;
    if (v < n) {
      for (int j = d - 1; j >= 0; --j) {
        if (supports[j].first == v) out.push_back(2 * j);
        else if (supports[j].second == v) out.push_back(2 * j + 1);
      }
    } else {
      out = {2 * (v - n), 2 * (v - n) + 1};
    }
    return out;
  }
};

// Signed count of crossings between two closed walks, made disjoint by
// running parallel strands in lanes across each edge band and connecting
// them by chords inside the vertex disks.
Int walk_intersection(const Graph& g, const Walk& p, const Walk& q) {
  if (p.empty() || q.empty()) return 0;

  // lane number per step: per edge, in order of encounter, P strands first
  std::map<int, int> lane_count;
  auto assign = [&](const Walk& w) {
    std::vector<int> lanes(w.size());
    for (std::size_t t = 0; t < w.size(); ++t) lanes[t] = lane_count[w[t].edge]++;
    return lanes;
  };
  std::vector<int> lane_p = assign(p);
  std::vector<int> lane_q = assign(q);

  // Circular marked-point positions per vertex: for each half-edge in ccw
  // order, the lanes of its band end. A band leaving the vertex (fiber end)
  // lists lanes descending; a band entering it (ram end) ascending.
  struct VertexDisk {
    std::map<std::pair<int, int>, int> pos;  // (edge, lane) -> circle index
    int size = 0;
  };
  std::map<int, VertexDisk> disks;
  auto disk_for = [&](int v) -> VertexDisk& {
    auto it = disks.find(v);
    if (it != disks.end()) return it->second;
    VertexDisk dk;
    int idx = 0;
    for (int e : g.ccw_edges(v)) {
      auto cnt_it = lane_count.find(e);
      const int cnt = cnt_it == lane_count.end() ? 0 : cnt_it->second;
      const bool outgoing = g.fiber_end(e) == v;
      if (outgoing) {
        for (int l = cnt - 1; l >= 0; --l) dk.pos[{e, l}] = idx++;
      } else {
        for (int l = 0; l < cnt; ++l) dk.pos[{e, l}] = idx++;
      }
    }
    dk.size = idx;
    return disks.emplace(v, std::move(dk)).first->second;
  };

  // Chords: one per vertex visit, from the arrival point to the departure point.
  struct Chord {
    int vertex, a, b, m;
  };
  auto chords_of = [&](const Walk& w, const std::vector<int>& lanes) {
    std::vector<Chord> out;
    for (std::size_t t = 0; t < w.size(); ++t) {
      const Step& in = w[t];
      const Step& out_step = w[(t + 1) % w.size()];
      const int v = in.dir > 0 ? g.ram_vertex(in.edge) : g.fiber_end(in.edge);
      VertexDisk& dk = disk_for(v);
      out.push_back({v, dk.pos.at({in.edge, lanes[t]}),
                     dk.pos.at({out_step.edge, lanes[(t + 1) % w.size()]}), dk.size});
    }
    return out;
  };
  std::vector<Chord> cp = chords_of(p, lane_p);
  std::vector<Chord> cq = chords_of(q, lane_q);

  auto in_arc = [](int x, int from, int to, int m) {
    return (x - from + m) % m < (to - from + m) % m && x != from;
  };
  Int total = 0;
  for (const Chord& c1 : cp)
    for (const Chord& c2 : cq) {
      if (c1.vertex != c2.vertex) continue;
      const bool a_in = in_arc(c2.a, c1.a, c1.b, c1.m);
      const bool b_in = in_arc(c2.b, c1.a, c1.b, c1.m);
      if (a_in == b_in) continue;
      total += a_in ? 1 : -1;
    }
  return total;
}

IMatrix unimodular_inverse(const IMatrix& m) {
  SmithResult s = smith_normal_form(m);
  if (s.d != IMatrix::identity(m.rows()))
    throw error("internal: matrix is not unimodular");
  return s.v * s.u;
}

}  // namespace

CoverModel::CoverModel(MonodromyRep theta) : theta_(std::move(theta)) {}

CoverModel build_cover(const MonodromyRep& theta) {
  ValidationReport vr = validate_rep(theta);
  if (!vr.pass()) {
    std::string why;
    for (const auto& c : vr.checks)
      if (!c.pass) why += (why.empty() ? "" : "; ") + c.name;
    throw precondition_error("invalid monodromy representation: " + why);
  }
  const int n = theta.n, d = theta.d;
  if (d % 2 != 0) throw precondition_error("genus 1 - n + d/2 is not an integer (odd d)");
  const int genus = 1 - n + d / 2;
  if (genus < 0) throw precondition_error("negative genus for n = " + std::to_string(n) +
                                          ", d = " + std::to_string(d));

  CoverModel c(theta);
  c.boundary_count_ = evaluate(theta, FreeWord::boundary(d)).cycle_count();

  // Genus from the spine's Euler characteristic, cross-checked against the
  // cover formula.
  const int chi_spine = c.spine_vertices() - c.spine_edges();  // = n - d
  const int chi_capped = chi_spine + c.boundary_count_;
  if ((2 - chi_capped) % 2 != 0 || (2 - chi_capped) / 2 != genus)
    throw error("internal: genus mismatch between spine and cover formula");
  c.genus_ = genus;

  Graph g;
  g.n = n;
  g.d = d;
  for (const auto& [a, b] : theta.images) g.supports.emplace_back(a - 1, b - 1);
  c.supports_ = g.supports;

  // Spanning tree of the pruned spine (fiber + ramification vertices), BFS
  // from the sheet-1 vertex scanning edges in ascending id order.
  const int V = n + d, E = 2 * d;
  c.edge_in_tree_.assign(E, false);
  c.tree_path_.assign(V, {});
  std::vector<char> seen(V, 0);
  seen[0] = 1;
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      for (int e = 0; e < E; ++e) {
        const int fv = g.fiber_end(e), rv = g.ram_vertex(e);
        int other = -1, dir = 0;
        if (fv == v) { other = rv; dir = +1; }
        else if (rv == v) { other = fv; dir = -1; }
        else continue;
        if (seen[other]) continue;
        seen[other] = 1;
        c.edge_in_tree_[e] = true;
        c.tree_path_[other] = c.tree_path_[v];
        c.tree_path_[other].push_back({e, dir});
        next.push_back(other);
      }
    }
    frontier = std::move(next);
  }
  for (int v = 0; v < V; ++v)
    if (!seen[v]) throw error("internal: spine is disconnected for a transitive representation");

  for (int e = 0; e < E; ++e)
    if (!c.edge_in_tree_[e]) c.nontree_edges_.push_back(e);
  const int m = static_cast<int>(c.nontree_edges_.size());
  if (m != d - n + 1) throw error("internal: unexpected spine cycle rank");

  // Fundamental cycle walks: tree path to the fiber end, the edge itself,
  // tree path back from the ramification end.
  auto lambda_walk = [&](int e) {
    Walk w;
    for (auto [te, td] : c.tree_path_[g.fiber_end(e)]) w.push_back({te, td});
    w.push_back({e, +1});
    const auto& back = c.tree_path_[g.ram_vertex(e)];
    for (auto it = back.rbegin(); it != back.rend(); ++it) w.push_back({it->first, -it->second});
    return w;
  };
  std::vector<Walk> lwalks;
  for (int e : c.nontree_edges_) lwalks.push_back(lambda_walk(e));

  IMatrix j_gamma(m, m);
  for (int i = 0; i < m; ++i)
    for (int k = i + 1; k < m; ++k) {
      Int x = walk_intersection(g, lwalks[i], lwalks[k]);
      j_gamma.at(i, k) = x;
      j_gamma.at(k, i) = -x;
    }

  // Fundamental-cycle words (based loops at the sheet-1 vertex): consecutive
  // steps pair up through each ramification vertex into one positive letter.
  auto walk_word = [&](const Walk& w) {
    std::vector<int> letters;
    for (std::size_t t = 0; t + 1 < w.size(); t += 2) {
      if (w[t].edge == w[t + 1].edge) continue;  // backtrack, contributes nothing
      letters.push_back(w[t].edge / 2 + 1);
    }
    return FreeWord(d, std::move(letters), false);
  };
  std::vector<FreeWord> lwords;
  for (const auto& w : lwalks) lwords.push_back(walk_word(w));

  // Boundary cycles, one per sheet: the lift of g_1...g_d.
  auto chain_from = [&](const FreeWord& w, int start_sheet) {
    std::vector<Int> chain(E);
    int cur = start_sheet;
    for (int l : w.letters) {
      const int j = (l < 0 ? -l : l) - 1;
      const auto& [a, b] = g.supports[j];
      if (cur != a && cur != b) continue;
      const int other = a + b - cur;
      chain[2 * j + (cur == a ? 0 : 1)] += 1;
      chain[2 * j + (other == a ? 0 : 1)] -= 1;
      cur = other;
    }
    return chain;
  };
  IMatrix boundary(n, m);
  const FreeWord bword = FreeWord::boundary(d);
  for (int s = 0; s < n; ++s) {
    auto chain = chain_from(bword, s);
    for (int k = 0; k < m; ++k) boundary.at(s, k) = chain[c.nontree_edges_[k]];
  }

  SmithResult snf = smith_normal_form(boundary);
  const int r = snf.rank;
  if (r != n - 1) throw error("internal: boundary span has unexpected rank");
  for (int i = 0; i < r; ++i)
    if (snf.d.at(i, i) != 1) throw error("internal: boundary sublattice is not saturated");
  if (m - r != 2 * genus) throw error("internal: capped homology rank mismatch");

  // Quotient coordinates: c = V^T x, boundary directions are the first r.
  IMatrix vt = snf.v.transposed();
  IMatrix v_inv = snf.v_inv;
  IMatrix j_w = v_inv * j_gamma * v_inv.transposed();
  // Boundary classes lie in the radical of the intersection pairing.
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < m; ++k)
      if (j_w.at(i, k) != 0 || j_w.at(k, i) != 0)
        throw error("internal: boundary class not in the radical of the pairing");

  IMatrix j_quot(2 * genus, 2 * genus);
  for (int i = 0; i < 2 * genus; ++i)
    for (int k = 0; k < 2 * genus; ++k) j_quot.at(i, k) = j_w.at(r + i, r + k);

  IMatrix s = genus > 0 ? symplectic_basis(j_quot) : IMatrix::identity(0);
  IMatrix s_inv = genus > 0 ? unimodular_inverse(s) : IMatrix::identity(0);
  c.j_ = s.transposed() * j_quot * s;

  IMatrix drop(2 * genus, m);
  for (int i = 0; i < 2 * genus; ++i)
    for (int k = 0; k < m; ++k) drop.at(i, k) = vt.at(r + i, k);
  c.lambda_to_final_ = s_inv * drop;

  // Representative loops for the final basis classes: lift each final basis
  // vector to lambda coordinates (zero boundary part) and concatenate the
  // fundamental-cycle loops accordingly.
  IMatrix v_inv_t = v_inv.transposed();
  for (int k = 0; k < 2 * genus; ++k) {
    IVec c_w(m);
    for (int i = 0; i < 2 * genus; ++i) c_w[r + i] = s.at(i, k);
    IVec x = IVec(m);
    for (int i = 0; i < m; ++i)
      for (int t = 0; t < m; ++t) x[i] += v_inv_t.at(i, t) * c_w[t];
    FreeWord loop = FreeWord::identity(d);
    for (int e = 0; e < m; ++e) {
      if (x[e] == 0) continue;
      const FreeWord& step = lwords[e];
      const FreeWord use = x[e] > 0 ? step : invert(step);
      for (Int rep = 0; rep < (x[e] > 0 ? x[e] : Int(-x[e])); ++rep) loop = concat(loop, use);
    }
    c.basis_loops_.push_back(std::move(loop));
  }
  return c;
}

IVec CoverModel::chain_lambda(const FreeWord& w) const {
  const int d = theta_.d;
  const int E = 2 * d;
  std::vector<Int> chain(E);
  int cur = 0;
  for (int l : w.letters) {
    const int j = (l < 0 ? -l : l) - 1;
    const auto& [a, b] = supports_[j];
    if (cur != a && cur != b) continue;
    const int other = a + b - cur;
    chain[2 * j + (cur == a ? 0 : 1)] += 1;
    chain[2 * j + (other == a ? 0 : 1)] -= 1;
    cur = other;
  }
  if (cur != 0)
    throw precondition_error("loop does not close up on sheet 1");
  IVec out(nontree_edges_.size());
  for (std::size_t k = 0; k < nontree_edges_.size(); ++k) out[k] = chain[nontree_edges_[k]];
  return out;
}

IVec CoverModel::homology_class(const FreeWord& w) const {
  if (w.rank != theta_.d) throw mismatch_error("loop rank does not match the cover");
  IVec x = chain_lambda(w);
  IVec out(2 * genus_);
  for (int i = 0; i < 2 * genus_; ++i)
    for (std::size_t k = 0; k < x.size(); ++k)
      out[i] += lambda_to_final_.at(i, static_cast<int>(k)) * x[k];
  return out;
}

Int CoverModel::pair(const IVec& x, const IVec& y) const {
  Int s = 0;
  for (int i = 0; i < j_.rows(); ++i) {
    if (x[i] == 0) continue;
    for (int k = 0; k < j_.cols(); ++k) s += x[i] * j_.at(i, k) * y[k];
  }
  return s;
}

SymplecticAction lift_action(const CoverModel& c, const BraidWord& q) {
  if (!is_liftable(c.theta(), q))
    throw precondition_error("braid is not liftable for this representation");
  const int r = c.h1_rank();
  IMatrix m(r, r);
  for (int k = 0; k < r; ++k) {
    IVec row = c.homology_class(artin_act(c.basis_loops()[k], q));
    for (int j = 0; j < r; ++j) m.at(k, j) = row[j];
  }
  // exact symplectic check: M J M^T = J in the row-action convention
  if (m * c.intersection_form() * m.transposed() != c.intersection_form())
    throw error("internal: lifted action does not preserve the intersection form");
  return {std::move(m)};
}

std::optional<IVec> vanishing_class(const CoverModel& c, const Factor& f) {
  if (f.degree != 1) throw precondition_error("vanishing class requires a degree-1 factor");
  const BraidWord u = underlying_braid(f);
  if (!is_liftable(c.theta(), u))
    throw precondition_error("factor braid is not liftable for this representation");

  const IMatrix m = lift_action(c, u).m;
  const int r = m.rows();
  const IMatrix b = m - IMatrix::identity(r);
  if (b.is_zero()) return std::nullopt;

  // b must be the outer form (J v^T) v; extract v up to sign.
  int i0 = -1;
  for (int i = 0; i < r && i0 < 0; ++i)
    for (int j = 0; j < r; ++j)
      if (b.at(i, j) != 0) {
        i0 = i;
        break;
      }
  IVec p(r);
  Int gc = 0;
  for (int j = 0; j < r; ++j) {
    p[j] = b.at(i0, j);
    gc = boost::multiprecision::gcd(gc, p[j]);
  }
  for (auto& x : p) x /= gc;
  for (int j = 0; j < r; ++j) {
    if (p[j] == 0) continue;
    if (p[j] < 0)
      for (auto& x : p) x = -x;
    break;
  }

  // u = J p^T
  IVec u_col(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) u_col[i] += c.intersection_form().at(i, j) * p[j];

  Int c2;
  bool have_c2 = false;
  for (int i = 0; i < r && !have_c2; ++i)
    for (int j = 0; j < r; ++j)
      if (u_col[i] != 0 && p[j] != 0) {
        Int denom = u_col[i] * p[j];
        if (b.at(i, j) % denom != 0) throw error("lift is not a transvection");
        c2 = b.at(i, j) / denom;
        have_c2 = true;
        break;
      }
  if (!have_c2 || c2 <= 0) throw error("lift is not a transvection");
  Int cc = boost::multiprecision::sqrt(c2);
  if (cc * cc != c2) throw error("lift is not a transvection");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (b.at(i, j) != c2 * u_col[i] * p[j]) throw error("lift is not a transvection");

  IVec v(r);
  for (int j = 0; j < r; ++j) v[j] = cc * p[j];
  return v;
}

ValidationReport pencil_monodromy_check(const CoverModel& c, const BraidFactorization& f) {
  ValidationReport rep;
  ValidationReport compat = check_compatibility(c.theta(), f);
  std::string failing;
  for (const auto& ch : compat.checks)
    if (!ch.pass) failing += (failing.empty() ? "" : ", ") + ch.name;
  rep.add("compatibility", compat.pass(), failing.empty() ? "" : "failing: " + failing);

  const int r = c.h1_rank();
  bool kernel_ok = true;
  std::string kernel_detail;
  IMatrix prod = IMatrix::identity(r);
  bool product_defined = true;
  for (std::size_t j = 0; j < f.factors.size(); ++j) {
    const Factor& fac = f.factors[j];
    try {
      IMatrix m = lift_action(c, underlying_braid(fac)).m;
      prod = prod * m;
      const int deg = fac.degree < 0 ? -fac.degree : fac.degree;
      if (deg != 1 && m != IMatrix::identity(r)) {
        kernel_ok = false;
        kernel_detail += (kernel_detail.empty() ? "factor " : ", ") + std::to_string(j + 1);
      }
    } catch (const error& e) {
      kernel_ok = false;
      product_defined = false;
      kernel_detail += (kernel_detail.empty() ? "factor " : ", ") + std::to_string(j + 1) +
                       " (" + e.what() + ")";
    }
  }
  rep.add("kernel_factors", kernel_ok, kernel_detail);

  bool product_ok = false;
  std::string product_detail;
  if (product_defined) {
    try {
      IMatrix ft = lift_action(c, full_twist(f.strand_count)).m;
      product_ok = prod == ft;
      if (!product_ok) product_detail = "ordered product differs from the full-twist lift";
    } catch (const error& e) {
      product_detail = e.what();
    }
  } else {
    product_detail = "product undefined: some factor is not liftable";
  }
  rep.add("product_full_twist_lift", product_ok, product_detail);

  bool trans_ok = true;
  std::string trans_detail;
  for (std::size_t j = 0; j < f.factors.size(); ++j) {
    if (f.factors[j].degree != 1) continue;
    try {
      vanishing_class(c, f.factors[j]);  // verifies the exact transvection form
    } catch (const error& e) {
      trans_ok = false;
      trans_detail += (trans_detail.empty() ? "factor " : ", ") + std::to_string(j + 1) + " (" +
                      e.what() + ")";
    }
  }
  rep.add("tangency_transvections", trans_ok, trans_detail);
  return rep;
}

}  // namespace mono

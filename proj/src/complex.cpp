#include "f1cones/complex.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "f1cones/errors.hpp"

namespace f1cones {

namespace {

IntMatrix inverse(const IntMatrix& m) {
  auto inv = unimodular_inverse(m);
  if (!inv) throw Error(ErrorKind::NonIsomorphicGluing, "matrix " + m.to_string() + " is not invertible over Z");
  return *inv;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

std::vector<Integer> flatten(const IntMatrix& m) {
  std::vector<Integer> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Faces of c contained in f (including f).
std::vector<Face> faces_below(const Cone& c, const Face& f) {
  std::vector<Face> out;
  for (const auto& g : c.faces())
    if (is_subset(g.rays, f.rays)) out.push_back(g);
  return out;
}

Face face_or_throw(const Cone& c, const IntVec& cutter, const char* what) {
  if (cutter.size() != c.ambient_dim())
    throw Error(ErrorKind::NonIsomorphicGluing, std::string(what) + " cutter has wrong length");
  auto f = c.face_cut_by(cutter);
  if (!f)
    throw Error(ErrorKind::NonIsomorphicGluing,
                std::string(what) + " cutter " + to_string(cutter) + " is positive somewhere on " + c.to_string());
  return *f;
}

struct Lift {
  std::size_t cone;
  IntMatrix transport;
  bool operator<(const Lift& o) const {
    if (cone != o.cone) return cone < o.cone;
    return flatten(transport) < flatten(o.transport);
  }
  bool operator==(const Lift& o) const { return cone == o.cone && transport == o.transport; }
};

ConeComplex induced_subcomplex(const ConeComplex& s, const std::vector<std::size_t>& keep) {
  std::map<std::size_t, std::size_t> index;
  std::vector<PuncturedCone> cones;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    index[keep[k]] = k;
    cones.push_back(s.cone(keep[k]));
  }
  std::vector<Gluing> gluings;
  for (const auto& g : s.gluings()) {
    auto a = index.find(g.from), b = index.find(g.to);
    if (a == index.end() || b == index.end()) continue;
    Gluing h = g;
    h.from = a->second;
    h.to = b->second;
    gluings.push_back(std::move(h));
  }
  return ConeComplex::validate(std::move(cones), std::move(gluings));
}

}  // namespace

Cone map_cone(const Cone& c, const IntMatrix& point_map, const CharacterGroup& target) {
  std::vector<IntVec> rays, lin;
  for (const auto& r : c.generators()) {
    IntVec p = point_map.apply(r);
    if (!is_zero(p)) rays.push_back(std::move(p));
  }
  for (const auto& l : c.lineality()) {
    IntVec p = point_map.apply(l);
    if (!is_zero(p)) lin.push_back(std::move(p));
  }
  return Cone::from_rays(target, rays, lin);
}

std::optional<Face> map_face(const Cone& source, const Face& f, const IntMatrix& point_map, const Cone& target) {
  std::vector<IntVec> rays;
  for (const auto& r : source.face_ray_vectors(f)) {
    IntVec p = point_map.apply(r);
    if (is_zero(p)) return std::nullopt;
    rays.push_back(primitive(p));
  }
  auto g = target.face_with_rays(rays);
  if (!g || g->rays.size() != f.rays.size()) return std::nullopt;
  return g;
}

// ---------------------------------------------------------------------------
// Validation

ConeComplex ConeComplex::validate(std::vector<PuncturedCone> cones, std::vector<Gluing> gluings) {
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (!cones[i].cone().is_pointed())
      throw Error(ErrorKind::NotPointed, "cone " + std::to_string(i) + " has lineality");

  for (auto& g : gluings) {
    if (g.from >= cones.size() || g.to >= cones.size())
      throw Error(ErrorKind::InvalidArgument, "gluing refers to a missing cone");
    const Cone& a = cones[g.from].cone();
    const Cone& b = cones[g.to].cone();
    const std::string label = "gluing " + std::to_string(g.from) + "~" + std::to_string(g.to);
    if (g.charmap.rows() != a.ambient_dim() || g.charmap.cols() != b.ambient_dim() || !is_unimodular(g.charmap))
      throw Error(ErrorKind::NonIsomorphicGluing, label + ": charmap " + g.charmap.to_string() +
                                                      " is not an isomorphism of character lattices");
    Face fa = face_or_throw(a, g.from_cutter, "source");
    Face fb = face_or_throw(b, g.to_cutter, "target");
    if (cones[g.from].is_punctured(fa) || cones[g.to].is_punctured(fb))
      throw Error(ErrorKind::NonIsomorphicGluing, label + " is along a punctured face");
    IntMatrix p = g.point_map();
    auto image = map_face(a, fa, p, b);
    if (!image || !(*image == fb))
      throw Error(ErrorKind::NonIsomorphicGluing, label + ": charmap does not carry one face onto the other");
    for (const auto& h : faces_below(a, fa)) {
      auto hb = map_face(a, h, p, b);
      if (!hb || cones[g.from].is_punctured(h) != cones[g.to].is_punctured(*hb))
        throw Error(ErrorKind::NonIsomorphicGluing, label + ": punctures of the glued faces differ");
    }
    g.from_cutter = fa.cutter;
    g.to_cutter = fb.cutter;
    if (g.from > g.to) {
      std::swap(g.from, g.to);
      std::swap(g.from_cutter, g.to_cutter);
      g.charmap = inverse(g.charmap);
    }
  }
  auto key = [](const Gluing& g) {
    return std::make_tuple(g.from, g.to, g.from_cutter, g.to_cutter, flatten(g.charmap));
  };
  std::sort(gluings.begin(), gluings.end(), [&](const Gluing& x, const Gluing& y) { return key(x) < key(y); });
  gluings.erase(std::unique(gluings.begin(), gluings.end()), gluings.end());

  ConeComplex out;
  out.cones_ = std::move(cones);
  out.gluings_ = std::move(gluings);

  // Nodes: kept faces of every cone.
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t i = 0; i < out.cones_.size(); ++i)
    for (const auto& f : out.cones_[i].kept_faces()) {
      index[{i, f.rays}] = out.nodes_.size();
      FaceNode n;
      n.cone = i;
      n.face = f;
      out.nodes_.push_back(std::move(n));
    }
  struct Edge {
    std::size_t to;
    IntMatrix map;  // N_from -> N_to
  };
  std::vector<std::vector<Edge>> adj(out.nodes_.size());
  struct Directed {
    std::size_t a, b;
    IntMatrix map;
  };
  std::vector<Directed> edges;
  for (const auto& g : out.gluings_) {
    const Cone& a = out.cones_[g.from].cone();
    const Cone& b = out.cones_[g.to].cone();
    IntMatrix p = g.point_map();
    IntMatrix pinv = inverse(p);
    Face fa = *a.face_cut_by(g.from_cutter);
    for (const auto& h : faces_below(a, fa)) {
      if (out.cones_[g.from].is_punctured(h)) continue;
      Face hb = *map_face(a, h, p, b);
      std::size_t na = index.at({g.from, h.rays}), nb = index.at({g.to, hb.rays});
      adj[na].push_back({nb, p});
      adj[nb].push_back({na, pinv});
      edges.push_back({na, nb, p});
    }
  }
  const std::size_t unset = static_cast<std::size_t>(-1);
  for (auto& n : out.nodes_) n.cls = unset;
  for (std::size_t s = 0; s < out.nodes_.size(); ++s) {
    if (out.nodes_[s].cls != unset) continue;
    const std::size_t cls = out.class_members_.size();
    out.class_members_.emplace_back();
    out.nodes_[s].cls = cls;
    out.nodes_[s].to_root = IntMatrix::identity(out.cones_[out.nodes_[s].cone].cone().ambient_dim());
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      out.class_members_[cls].push_back(x);
      for (const auto& e : adj[x]) {
        if (out.nodes_[e.to].cls != unset) continue;
        out.nodes_[e.to].cls = cls;
        out.nodes_[e.to].to_root = out.nodes_[x].to_root * inverse(e.map);
        queue.push_back(e.to);
      }
    }
    std::sort(out.class_members_[cls].begin(), out.class_members_[cls].end());
    for (std::size_t k = 1; k < out.class_members_[cls].size(); ++k) {
      const auto& prev = out.nodes_[out.class_members_[cls][k - 1]];
      const auto& cur = out.nodes_[out.class_members_[cls][k]];
      if (prev.cone == cur.cone)
        throw Error(ErrorKind::SelfGluedFaces, "faces with cutters " + f1cones::to_string(prev.face.cutter) + " and " +
                                                   f1cones::to_string(cur.face.cutter) + " of cone " +
                                                   std::to_string(cur.cone) + " are identified");
    }
  }
  for (const auto& e : edges) {
    const FaceNode& a = out.nodes_[e.a];
    const FaceNode& b = out.nodes_[e.b];
    for (const auto& r : out.cones_[a.cone].cone().face_ray_vectors(a.face))
      if (b.to_root.apply(e.map.apply(r)) != a.to_root.apply(r))
        throw Error(ErrorKind::IncoherentTransition,
                    "transitions around the face with cutter " + f1cones::to_string(a.face.cutter) + " of cone " +
                        std::to_string(a.cone) + " do not compose consistently");
  }
  out.index_ = std::move(index);
  return out;
}

std::optional<std::size_t> ConeComplex::node_of(std::size_t cone, const Face& face) const {
  auto it = index_.find({cone, face.rays});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IntMatrix ConeComplex::transport(std::size_t a, std::size_t b) const {
  if (nodes_.at(a).cls != nodes_.at(b).cls) throw Error(ErrorKind::InvalidArgument, "faces are not identified");
  return inverse(nodes_[b].to_root) * nodes_[a].to_root;
}

std::vector<std::vector<std::size_t>> ConeComplex::components() const {
  std::vector<std::size_t> parent(cones_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& members : class_members_)
    for (std::size_t k = 1; k < members.size(); ++k)
      parent[find(nodes_[members[k]].cone)] = find(nodes_[members[0]].cone);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < cones_.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::string ConeComplex::to_string() const {
  std::ostringstream os;
  os << "complex with " << cones_.size() << " cones\n";
  for (std::size_t i = 0; i < cones_.size(); ++i) os << "  [" << i << "] " << cones_[i].to_string() << "\n";
  for (const auto& g : gluings_)
    os << "  glue " << g.from << ":" << f1cones::to_string(g.from_cutter) << " ~ " << g.to << ":"
       << f1cones::to_string(g.to_cutter) << " via " << g.charmap.to_string() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Contiguity and stars

std::vector<Face> shared_faces(const ConeComplex& s, std::size_t i, std::size_t j) {
  if (i == j) return {s.cone(i).cone().whole_face()};
  std::vector<Face> shared;
  for (const auto& f : s.cone(i).kept_faces()) {
    std::size_t n = *s.node_of(i, f);
    for (std::size_t m : s.class_members(s.nodes()[n].cls))
      if (s.nodes()[m].cone == j) {
        shared.push_back(f);
        break;
      }
  }
  std::vector<Face> out;
  for (const auto& f : shared) {
    bool maximal = true;
    for (const auto& g : shared)
      if (g.rays != f.rays && is_subset(f.rays, g.rays)) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

std::optional<Face> contiguous(const ConeComplex& s, std::size_t i, std::size_t j) {
  auto faces = shared_faces(s, i, j);
  if (faces.empty()) return std::nullopt;
  return *std::max_element(faces.begin(), faces.end());
}

Cone Star::developed(std::size_t k) const {
  return map_cone(complex.cone(k).cone(), transport.at(k), complex.cone(center).cone().group());
}

Cone Star::developed_face(std::size_t k, const Face& f) const {
  return map_cone(complex.cone(k).cone().face_cone(f), transport.at(k), complex.cone(center).cone().group());
}

Star big_star(const ConeComplex& s, std::size_t i) {
  if (i >= s.size()) throw Error(ErrorKind::InvalidArgument, "no cone " + std::to_string(i));
  const std::size_t r = s.cone(i).cone().ambient_dim();
  std::set<Lift> lifts{{i, IntMatrix::identity(r)}};
  for (const auto& f : s.cone(i).kept_faces()) {
    std::size_t n = *s.node_of(i, f);
    for (std::size_t m : s.class_members(s.nodes()[n].cls)) lifts.insert({s.nodes()[m].cone, s.transport(m, n)});
  }
  std::vector<Lift> order(lifts.begin(), lifts.end());
  Star star;
  std::vector<PuncturedCone> cones;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Lift& l = order[k];
    if (l.cone == i && l.transport.is_identity()) star.center = k;
    star.source.push_back(l.cone);
    star.transport.push_back(l.transport);
    const PuncturedCone& pc = s.cone(l.cone);
    std::set<Face> punct = pc.punctures();
    for (const auto& g : pc.kept_faces()) {
      std::size_t n = *s.node_of(l.cone, g);
      for (std::size_t m : s.class_members(s.nodes()[n].cls)) {
        Lift other{s.nodes()[m].cone, l.transport * s.transport(m, n)};
        if (!lifts.count(other)) {
          punct.insert(g);
          break;
        }
      }
    }
    cones.emplace_back(pc.cone(), downward_closure(pc.cone(), punct));
  }
  std::vector<Gluing> gluings;
  for (const auto& g : s.gluings()) {
    IntMatrix pinv = inverse(g.point_map());
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (order[k].cone != g.from) continue;
      Lift partner{g.to, order[k].transport * pinv};
      auto it = std::find(order.begin(), order.end(), partner);
      if (it == order.end()) continue;
      std::size_t k2 = static_cast<std::size_t>(it - order.begin());
      Face fa = *cones[k].cone().face_cut_by(g.from_cutter);
      if (cones[k].is_punctured(fa)) continue;
      gluings.push_back({k, g.from_cutter, k2, g.to_cutter, g.charmap});
    }
  }
  star.complex = ConeComplex::validate(std::move(cones), std::move(gluings));
  return star;
}

Star small_star(const ConeComplex& s, std::size_t i, const std::optional<Face>& face) {
  Face f = face ? *s.cone(i).cone().face_with_rays(s.cone(i).cone().face_ray_vectors(*face))
                : s.cone(i).cone().whole_face();
  auto n = s.node_of(i, f);
  if (!n) throw Error(ErrorKind::InvalidArgument, "face is punctured");
  Star big = big_star(s, i);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < big.source.size(); ++k) {
    bool contains = false;
    for (std::size_t m : s.class_members(s.nodes()[*n].cls))
      if (s.nodes()[m].cone == big.source[k] && s.transport(m, *n) == big.transport[k]) contains = true;
    if (contains) keep.push_back(k);
  }
  Star out;
  out.complex = induced_subcomplex(big.complex, keep);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] == big.center) out.center = k;
    out.source.push_back(big.source[keep[k]]);
    out.transport.push_back(big.transport[keep[k]]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Local system

bool LocalSystem::is_constant() const { return first_nontrivial() == nullptr; }

const Loop* LocalSystem::first_nontrivial() const {
  for (const auto& l : loops)
    if (!l.matrix.is_identity()) return &l;
  return nullptr;
}

LocalSystem monodromy(const ConeComplex& s, std::size_t base) {
  if (base >= s.size()) throw Error(ErrorKind::InvalidArgument, "no cone " + std::to_string(base));
  LocalSystem ls;
  ls.base = base;
  ls.transport.assign(s.size(), std::nullopt);
  std::vector<std::size_t> parent(s.size(), base);
  std::vector<bool> tree_edge(s.gluings().size(), false);
  ls.transport[base] = IntMatrix::identity(s.cone(base).cone().ambient_dim());
  std::deque<std::size_t> queue{base};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t e = 0; e < s.gluings().size(); ++e) {
      const Gluing& g = s.gluings()[e];
      std::size_t y;
      IntMatrix step;  // N_y -> N_x
      if (g.from == x) {
        y = g.to;
        step = inverse(g.point_map());
      } else if (g.to == x) {
        y = g.from;
        step = g.point_map();
      } else {
        continue;
      }
      if (ls.transport[y]) continue;
      ls.transport[y] = *ls.transport[x] * step;
      parent[y] = x;
      tree_edge[e] = true;
      ls.tree.push_back(e);
      queue.push_back(y);
    }
  }
  auto path_to_base = [&](std::size_t x) {
    std::vector<std::size_t> p{x};
    while (x != base) {
      x = parent[x];
      p.push_back(x);
    }
    return p;
  };
  for (std::size_t e = 0; e < s.gluings().size(); ++e) {
    const Gluing& g = s.gluings()[e];
    if (tree_edge[e] || !ls.transport[g.from]) continue;
    // base -> to, across the gluing backwards, from -> base
    Loop loop;
    loop.gluing = e;
    IntMatrix m = *ls.transport[g.from] * inverse(g.point_map()) * inverse(*ls.transport[g.to]);
    std::vector<std::size_t> there = path_to_base(g.to);
    std::reverse(there.begin(), there.end());
    std::vector<std::size_t> back = path_to_base(g.from);
    loop.cones = there;
    loop.cones.insert(loop.cones.end(), back.begin(), back.end());
    // Orient each loop so its matrix is the lexicographically larger of m, m^-1.
    IntMatrix minv = inverse(m);
    if (flatten(minv) > flatten(m)) {
      m = minv;
      std::reverse(loop.cones.begin(), loop.cones.end());
    }
    loop.matrix = std::move(m);
    ls.loops.push_back(std::move(loop));
  }
  return ls;
}

Development develop(const ConeComplex& s, std::size_t base) {
  LocalSystem ls = monodromy(s, base);
  if (const Loop* l = ls.first_nontrivial())
    throw Error(ErrorKind::NonConstantSystem, "loop through gluing " + std::to_string(l->gluing) +
                                                  " has monodromy " + l->matrix.to_string());
  return Development{base, ls.transport};
}

// ---------------------------------------------------------------------------

ConeComplex puncture_along(const ConeComplex& s, const Subcomplex& u) {
  if (u.size() != s.size()) throw Error(ErrorKind::NotASubcomplex, "subcomplex has the wrong number of cones");
  std::vector<std::set<Face>> punct(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) punct[i] = s.cone(i).punctures();
  std::vector<bool> hit(s.nodes().size(), false);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const auto& f : u[i]) {
      const Cone& c = s.cone(i).cone();
      for (std::size_t r : f.rays)
        if (r >= c.generators().size()) throw Error(ErrorKind::NotASubcomplex, "not a face of cone " + std::to_string(i));
      auto face = c.face_with_rays(c.face_ray_vectors(f));
      if (!face) throw Error(ErrorKind::NotASubcomplex, "not a face of cone " + std::to_string(i));
      if (auto n = s.node_of(i, *face))
        for (std::size_t m : s.class_members(s.nodes()[*n].cls)) hit[m] = true;
    }
  for (std::size_t n = 0; n < hit.size(); ++n)
    if (hit[n]) punct[s.nodes()[n].cone].insert(s.nodes()[n].face);
  std::vector<PuncturedCone> cones;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Cone& c = s.cone(i).cone();
    if (punct[i].count(c.whole_face()))
      throw Error(ErrorKind::NotASubcomplex, "puncturing would remove cone " + std::to_string(i));
    std::set<Face> closed = downward_closure(c, punct[i]);
    // identification classes of lower faces follow from their cones
    cones.emplace_back(c, std::move(closed));
  }
  std::vector<Gluing> gluings;
  for (const auto& g : s.gluings()) {
    Face fa = *cones[g.from].cone().face_cut_by(g.from_cutter);
    if (!cones[g.from].is_punctured(fa)) gluings.push_back(g);
  }
  return ConeComplex::validate(std::move(cones), std::move(gluings));
}

ConeComplex cyclic_cover(const ConeComplex& s, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "cover degree must be positive");
  const std::size_t n = s.size();
  std::vector<bool> tree(s.gluings().size(), false);
  std::vector<bool> seen(n, false);
  for (std::size_t b = 0; b < n; ++b) {
    if (seen[b]) continue;
    LocalSystem ls = monodromy(s, b);
    for (std::size_t e : ls.tree) tree[e] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (ls.transport[i]) seen[i] = true;
  }
  std::vector<PuncturedCone> cones;
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < n; ++i) cones.push_back(s.cone(i));
  std::vector<Gluing> gluings;
  for (std::size_t e = 0; e < s.gluings().size(); ++e) {
    const Gluing& g = s.gluings()[e];
    for (std::size_t m = 0; m < k; ++m) {
      Gluing h = g;
      h.from = m * n + g.from;
      h.to = ((tree[e] ? m : m + 1) % k) * n + g.to;
      gluings.push_back(std::move(h));
    }
  }
  return ConeComplex::validate(std::move(cones), std::move(gluings));
}

// ---------------------------------------------------------------------------
// Morphisms

ComplexMorphism::ComplexMorphism(ConeComplex source, ConeComplex target, std::vector<ConeAssignment> assignments)
    : source_(std::move(source)), target_(std::move(target)), assignments_(std::move(assignments)) {
  if (assignments_.size() != source_.size())
    throw Error(ErrorKind::InvariantError, "morphism needs one assignment per source cone");
  for (std::size_t i = 0; i < source_.size(); ++i) {
    const auto& a = assignments_[i];
    if (a.target >= target_.size()) throw Error(ErrorKind::InvariantError, "assignment to a missing cone");
    const Cone& src = source_.cone(i).cone();
    const Cone& dst = target_.cone(a.target).cone();
    if (a.charmap.rows() != src.ambient_dim() || a.charmap.cols() != dst.ambient_dim())
      throw Error(ErrorKind::InvariantError, "charmap of cone " + std::to_string(i) + " has the wrong shape");
    IntMatrix p = a.point_map();
    for (const auto& r : src.generators())
      if (!dst.contains(p.apply(r)))
        throw Error(ErrorKind::InvariantError, "cone " + std::to_string(i) + " does not map into target cone " +
                                                   std::to_string(a.target));
    for (const auto& f : source_.cone(i).kept_faces()) {
      IntVec x = zero_vec(src.ambient_dim());
      for (const auto& r : src.face_ray_vectors(f)) x = add(x, r);
      if (target_.cone(a.target).is_punctured(dst.minimal_face_containing(p.apply(x))))
        throw Error(ErrorKind::InvariantError, "cone " + std::to_string(i) + " meets a punctured target face");
    }
  }
  for (const auto& g : source_.gluings()) {
    const auto& aa = assignments_[g.from];
    const auto& ab = assignments_[g.to];
    const Cone& src = source_.cone(g.from).cone();
    Face fa = *src.face_cut_by(g.from_cutter);
    IntVec x = zero_vec(src.ambient_dim());
    for (const auto& r : src.face_ray_vectors(fa)) x = add(x, r);
    IntVec ya = aa.point_map().apply(x);
    IntVec yb = ab.point_map().apply(g.point_map().apply(x));
    auto na = target_.node_of(aa.target, target_.cone(aa.target).cone().minimal_face_containing(ya));
    auto nb = target_.node_of(ab.target, target_.cone(ab.target).cone().minimal_face_containing(yb));
    if (!na || !nb || target_.nodes()[*na].cls != target_.nodes()[*nb].cls)
      throw Error(ErrorKind::InvariantError, "gluing " + std::to_string(g.from) + "~" + std::to_string(g.to) +
                                                 " is not respected by the morphism");
    if (target_.transport(*na, *nb) * aa.point_map() != ab.point_map() * g.point_map())
      throw Error(ErrorKind::InvariantError, "characters of the morphism disagree across gluing " +
                                                 std::to_string(g.from) + "~" + std::to_string(g.to));
  }
}

ComplexMorphism ComplexMorphism::identity(const ConeComplex& s) {
  std::vector<ConeAssignment> as;
  for (std::size_t i = 0; i < s.size(); ++i) as.push_back({i, IntMatrix::identity(s.cone(i).cone().ambient_dim())});
  return ComplexMorphism(s, s, std::move(as));
}

ComplexMorphism ComplexMorphism::to_point(const ConeComplex& s) {
  std::vector<ConeAssignment> as;
  for (std::size_t i = 0; i < s.size(); ++i) as.push_back({0, IntMatrix(s.cone(i).cone().ambient_dim(), 0)});
  return ComplexMorphism(s, point_complex(), std::move(as));
}

ConeComplex preimage(const ComplexMorphism& f, std::size_t j) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < f.source().size(); ++i)
    if (f.assignments()[i].target == j) keep.push_back(i);
  return induced_subcomplex(f.source(), keep);
}

ConeComplex relabel(const ConeComplex& s, const std::vector<std::size_t>& perm) {
  if (perm.size() != s.size()) throw Error(ErrorKind::InvalidArgument, "permutation of the wrong size");
  std::vector<PuncturedCone> cones(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) cones.at(perm[i]) = s.cone(i);
  std::vector<Gluing> gluings;
  for (const auto& g : s.gluings())
    gluings.push_back({perm[g.from], g.from_cutter, perm[g.to], g.to_cutter, g.charmap});
  return ConeComplex::validate(std::move(cones), std::move(gluings));
}

ConeComplex canonical_relabeling(const ConeComplex& s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> keys;
  for (const auto& pc : s.cones()) keys.push_back(pc.to_string());
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> perm(s.size());
  for (std::size_t k = 0; k < order.size(); ++k) perm[order[k]] = k;
  return relabel(s, perm);
}

ConeComplex point_complex() { return ConeComplex::validate({PuncturedCone(Cone())}, {}); }

}  // namespace f1cones

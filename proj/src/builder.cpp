#include "vkcurve/builder.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace vk {

namespace {

enum Role { kB = 0, kA = 1, kC = 2 };

// Relator edges of the face for generator j: b->a (j-1), a->c (j), b->c (j+1).
struct RelEdge {
  Role from, to;
  int offset;
};
constexpr RelEdge kRelator[3] = {{kB, kA, -1}, {kA, kC, 0}, {kB, kC, 1}};

RelEdge const& relator_edge(Role r, Role s) {
  for (auto const& e : kRelator) {
    if ((e.from == r && e.to == s) || (e.from == s && e.to == r)) return e;
  }
  throw BuilderError("no relator edge between equal roles");
}

// Walk order of each orientation.
constexpr Role kPositiveWalk[3] = {kB, kC, kA};
constexpr Role kNegativeWalk[3] = {kB, kA, kC};

}  // namespace

struct Builder::Roles {
  bool positive;
  Role x, y, z;  // tail of the dart, head of the dart, third vertex
};

Builder::Builder(int n) : n_(n) {
  if (n < 11 || n % 2 == 0) throw BuilderError("n must be odd and >= 11");
}

VertexIdx Builder::tail(DartIdx d) const {
  auto const& e = edges_[d >> 1];
  return (d & 1) ? e.head : e.tail;
}

VertexIdx Builder::add_vertex() {
  rotation_.emplace_back();
  return static_cast<VertexIdx>(rotation_.size() - 1);
}

DartIdx Builder::add_edge(VertexIdx tail, VertexIdx head, int label) {
  Edge e;
  e.id = static_cast<std::int64_t>(edges_.size());
  e.tail = tail;
  e.head = head;
  e.label = wrap_generator(label, n_);
  edges_.push_back(e);
  dart_face_.push_back(kNone);
  dart_face_.push_back(kNone);
  return 2 * static_cast<DartIdx>(e.id);
}

void Builder::insert_before(VertexIdx v, DartIdx anchor, DartIdx d) {
  auto& rot = rotation_[v];
  rot.insert(std::ranges::find(rot, anchor), d);
}

void Builder::insert_after(VertexIdx v, DartIdx anchor, DartIdx d) {
  auto& rot = rotation_[v];
  rot.insert(std::ranges::find(rot, anchor) + 1, d);
}

void Builder::record_face(std::vector<DartIdx> const& walk, int j) {
  int f = static_cast<int>(face_j_.size());
  face_j_.push_back(wrap_generator(j, n_));
  last_reduced_ = true;
  for (DartIdx d : walk) {
    dart_face_[d] = f;
    int g = dart_face_[d ^ 1];
    if (g != kNone && face_j_[g] == face_j_[f]) last_reduced_ = false;
  }
}

std::optional<int> Builder::face_j(DartIdx d) const {
  if (dart_face_[d] == kNone) return std::nullopt;
  return face_j_[dart_face_[d]];
}

bool Builder::on_frontier(VertexIdx v) const {
  return std::ranges::any_of(frontier_, [&](DartIdx d) { return tail(d) == v; });
}

int Builder::frontier_pos(DartIdx d) const {
  auto it = std::ranges::find(frontier_, d);
  if (it == frontier_.end()) throw BuilderError("dart " + std::to_string(d) + " is not on the frontier");
  return static_cast<int>(it - frontier_.begin());
}

DartIdx Builder::frontier_in(VertexIdx v) const {
  for (DartIdx d : frontier_) {
    if (head(d) == v) return d;
  }
  throw BuilderError("vertex " + std::to_string(v) + " is not on the frontier");
}

DartIdx Builder::frontier_out(VertexIdx v) const {
  for (DartIdx d : frontier_) {
    if (tail(d) == v) return d;
  }
  throw BuilderError("vertex " + std::to_string(v) + " is not on the frontier");
}

std::optional<Builder::Roles> Builder::roles_for(DartIdx d, int j) const {
  bool forward = (d & 1) == 0;
  int lab = label(d);
  for (bool positive : {true, false}) {
    auto const* walk = positive ? kPositiveWalk : kNegativeWalk;
    for (int k = 0; k < 3; ++k) {
      Role rx = walk[k], ry = walk[(k + 1) % 3], rz = walk[(k + 2) % 3];
      auto const& e = relator_edge(rx, ry);
      if ((e.from == rx) != forward) continue;
      if (wrap_generator(j + e.offset, n_) != lab) continue;
      return Roles{positive, rx, ry, rz};
    }
  }
  return std::nullopt;
}

Builder& Builder::attach_face(int j, bool positive) {
  if (!empty()) throw BuilderError("fresh faces only start an empty builder");
  VertexIdx b = add_vertex(), a = add_vertex(), c = add_vertex();
  DartIdx ba = add_edge(b, a, j - 1);
  DartIdx ac = add_edge(a, c, j);
  DartIdx bc = add_edge(b, c, j + 1);
  std::vector<DartIdx> walk = positive ? std::vector<DartIdx>{bc, ac ^ 1, ba ^ 1}
                                       : std::vector<DartIdx>{ba, ac, bc ^ 1};
  for (int k = 0; k < 3; ++k) {
    DartIdx in = walk[(k + 2) % 3];  // arrives at tail(walk[k])
    rotation_[tail(walk[k])] = {in ^ 1, walk[k]};
  }
  frontier_ = {walk[2] ^ 1, walk[1] ^ 1, walk[0] ^ 1};
  record_face(walk, j);
  return *this;
}

std::vector<int> Builder::attach_options(DartIdx d) const {
  std::vector<int> out;
  for (int dj : {-1, 0, 1}) {
    int j = wrap_generator(label(d) + dj, n_);
    if (roles_for(d, j)) out.push_back(j);
  }
  return out;
}

Builder& Builder::attach_face(DartIdx d, int j) {
  int pos = frontier_pos(d);
  j = wrap_generator(j, n_);
  auto roles = roles_for(d, j);
  if (!roles) throw BuilderError("label clash: dart label does not occur in the relator for j");
  VertexIdx x = tail(d), y = head(d), z = add_vertex();
  auto make = [&](VertexIdx u, Role ru, VertexIdx w, Role rw) {
    auto const& e = relator_edge(ru, rw);
    DartIdx fwd = e.from == ru ? add_edge(u, w, j + e.offset) : add_edge(w, u, j + e.offset);
    return e.from == ru ? fwd : (fwd ^ 1);  // dart u -> w
  };
  DartIdx yz = make(y, roles->y, z, roles->z);
  DartIdx xz = make(x, roles->x, z, roles->z);
  insert_after(y, d ^ 1, yz);
  insert_before(x, d, xz);
  rotation_[z] = {yz ^ 1, xz ^ 1};
  frontier_[pos] = xz;
  frontier_.insert(frontier_.begin() + pos + 1, yz ^ 1);
  record_face({d, yz, xz ^ 1}, j);
  return *this;
}

std::vector<int> Builder::fill_options(DartIdx d) const {
  std::vector<int> out;
  if (frontier_.size() <= 3) return out;
  int pos = frontier_pos(d);
  DartIdx d2 = frontier_[(pos + 1) % frontier_.size()];
  VertexIdx x = tail(d), y = head(d), w = head(d2);
  if (x == w || rotation_[y].size() < 5) return out;
  for (DartIdx e : rotation_[x]) {
    if (head(e) == w) return out;
  }
  for (int dj : {-1, 0, 1}) {
    int j = wrap_generator(label(d) + dj, n_);
    auto roles = roles_for(d, j);
    if (!roles) continue;
    auto const& e = relator_edge(roles->y, roles->z);
    bool forward = (d2 & 1) == 0;
    if ((e.from == roles->y) == forward && wrap_generator(j + e.offset, n_) == label(d2)) out.push_back(j);
  }
  return out;
}

Builder& Builder::fill_corner(DartIdx d, int j) {
  j = wrap_generator(j, n_);
  auto options = fill_options(d);
  if (std::ranges::find(options, j) == options.end()) {
    throw BuilderError("corner cannot be filled with a relator face for j = " + std::to_string(j));
  }
  int pos = frontier_pos(d);
  int pos2 = (pos + 1) % static_cast<int>(frontier_.size());
  DartIdx d2 = frontier_[pos2];
  auto roles = roles_for(d, j);
  VertexIdx x = tail(d), w = head(d2);
  auto const& e = relator_edge(roles->x, roles->z);
  DartIdx xw = e.from == roles->x ? add_edge(x, w, j + e.offset) : (add_edge(w, x, j + e.offset) ^ 1);
  insert_before(x, d, xw);
  insert_after(w, d2 ^ 1, xw ^ 1);
  frontier_[pos] = xw;
  frontier_.erase(frontier_.begin() + pos2);
  record_face({d, d2, xw ^ 1}, j);
  return *this;
}

VertexIdx Builder::extend(VertexIdx v, bool after, bool outward, int lab) {
  DartIdx d = after ? frontier_in(v) : frontier_out(v);
  lab = wrap_generator(lab, n_);
  for (int j : attach_options(d)) {
    auto roles = roles_for(d, j);
    Role rv = after ? roles->y : roles->x;
    auto const& e = relator_edge(rv, roles->z);
    if ((e.from == rv) == outward && wrap_generator(j + e.offset, n_) == lab) {
      attach_face(d, j);
      return static_cast<VertexIdx>(rotation_.size() - 1);
    }
  }
  throw BuilderError("no relator face gives vertex " + std::to_string(v) + " the requested edge");
}

bool Builder::can_close(VertexIdx v) const {
  return on_frontier(v) && !fill_options(frontier_in(v)).empty();
}

void Builder::close(VertexIdx v) {
  DartIdx d = frontier_in(v);
  auto options = fill_options(d);
  if (options.empty()) throw BuilderError("vertex " + std::to_string(v) + " cannot be closed");
  fill_corner(d, options.front());
}

Diagram Builder::build() const {
  if (empty()) throw BuilderError("empty builder");
  DiagramSpec spec;
  spec.n = n_;
  spec.surface = Surface::disk;
  for (int v = 0; v < vertex_count(); ++v) spec.vertex_ids.push_back(v);
  spec.edges = edges_;
  spec.rotation = rotation_;
  spec.outer = *std::ranges::min_element(frontier_);
  return Diagram::assemble(std::move(spec));
}

Diagram random_diagram(std::uint64_t seed, int faces, int n) {
  if (faces < 1) throw BuilderError("random_diagram needs at least one face");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  Builder b(n);
  b.attach_face(wrap_generator(static_cast<long long>(rng() % n) + 1, n), (rng() & 1) == 0);
  int stalls = 0;
  while (b.face_count() < faces) {
    auto const& fr = b.frontier();
    std::vector<std::pair<DartIdx, int>> fills;
    for (DartIdx d : fr) {
      for (int j : b.fill_options(d)) fills.emplace_back(d, j);
    }
    Builder next = b;
    if (!fills.empty() && (rng() & 1) == 0) {
      auto [d, j] = fills[pick(fills.size())];
      next.fill_corner(d, j);
    } else {
      DartIdx d = fr[pick(fr.size())];
      auto opts = next.attach_options(d);
      next.attach_face(d, opts[pick(opts.size())]);
    }
    if (!next.last_face_reduced()) {
      if (++stalls > 100000) throw BuilderError("random_diagram could not extend reducedly");
      continue;
    }
    b = std::move(next);
  }
  return b.build();
}

}  // namespace vk

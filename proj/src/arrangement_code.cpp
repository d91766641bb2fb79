#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "spherelink/embedding.hpp"

namespace spherelink {

namespace {

constexpr std::int32_t kOpenPart = -1;
constexpr std::int32_t kClosePart = -2;
constexpr std::int32_t kOpenFace = -3;
constexpr std::int32_t kCloseFace = -4;

using Code = std::vector<std::int32_t>;

class Encoder {
 public:
  explicit Encoder(const SphericalArrangement& a) : a_(a) {}

  Code root() {
    Code best;
    bool have = false;
    for (int g = 0; g < a_.global_face_count(); ++g) {
      Code c = global(g, -1);
      if (!have || c < best) {
        best = std::move(c);
        have = true;
      }
    }
    return best;
  }

 private:
  Code global(int g, int from_part) {
    std::vector<Code> children;
    for (int lid : a_.global_face(g)) {
      if (a_.local_faces()[lid].part == from_part) continue;
      children.push_back(part(lid));
    }
    std::sort(children.begin(), children.end());
    Code out{kOpenFace};
    for (const Code& c : children) out.insert(out.end(), c.begin(), c.end());
    out.push_back(kCloseFace);
    return out;
  }

  // Code of the part owning local face `entry`, entered through that face.
  Code part(int entry) {
    if (auto it = memo_.find(entry); it != memo_.end()) return it->second;
    const LocalFace& ef = a_.local_faces()[entry];
    const int pid = ef.part;
    Code best;
    if (ef.face.walk.empty()) {
      best = {kOpenPart, 0, kClosePart};
    } else {
      bool have = false;
      for (const Dart& d : ef.face.walk) {
        Code c = from_dart(pid, entry, d);
        if (!have || c < best) {
          best = std::move(c);
          have = true;
        }
      }
    }
    memo_.emplace(entry, best);
    return best;
  }

  Code from_dart(int pid, int entry, Dart start) {
    const Rotation& rot = a_.rotation();
    std::map<Vertex, int> label;
    std::map<Vertex, int> first;  // ring offset where scanning starts
    std::vector<Vertex> queue{start.from};
    label[start.from] = 0;
    first[start.from] = static_cast<int>(std::find(rot[start.from].begin(), rot[start.from].end(), start.to) -
                                         rot[start.from].begin());
    Code out{kOpenPart};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex x = queue[i];
      const auto& ring = rot[x];
      out.push_back(static_cast<std::int32_t>(ring.size()));
      for (std::size_t k = 0; k < ring.size(); ++k) {
        const Vertex y = ring[(first[x] + k) % ring.size()];
        auto [it, fresh] = label.emplace(y, static_cast<int>(label.size()));
        if (fresh) {
          queue.push_back(y);
          first[y] = static_cast<int>(std::find(rot[y].begin(), rot[y].end(), x) - rot[y].begin());
        }
        out.push_back(it->second);
      }
    }
    // remaining faces in order of their smallest dart rank
    std::vector<std::pair<std::pair<int, int>, int>> order;
    for (int lid : a_.parts()[pid].faces) {
      if (lid == entry) continue;
      std::pair<int, int> rank{1 << 30, 0};
      for (const Dart& d : a_.local_faces()[lid].face.walk) {
        const auto& ring = rot[d.from];
        const int pos = static_cast<int>(std::find(ring.begin(), ring.end(), d.to) - ring.begin());
        const int off = (pos - first[d.from] + static_cast<int>(ring.size())) % static_cast<int>(ring.size());
        rank = std::min(rank, {label[d.from], off});
      }
      order.push_back({rank, lid});
    }
    std::sort(order.begin(), order.end());
    for (const auto& [rank, lid] : order) {
      Code c = global(a_.local_faces()[lid].global, pid);
      out.insert(out.end(), c.begin(), c.end());
    }
    out.push_back(kClosePart);
    return out;
  }

  const SphericalArrangement& a_;
  std::map<int, Code> memo_;
};

}  // namespace

std::string ArrangementCertificate::hex() const {
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (std::int32_t t : code) os << std::setw(4) << (static_cast<unsigned>(t) & 0xffffu);
  return os.str();
}

ArrangementCertificate certificate(const SphericalArrangement& a, bool reflection_equivalence) {
  ArrangementCertificate c{Encoder(a).root()};
  if (reflection_equivalence && !a.parts().empty()) {
    const SphericalArrangement r = a.reflected();
    ArrangementCertificate m{Encoder(r).root()};
    if (m < c) return m;
  }
  return c;
}

bool equivalent(const SphericalArrangement& a, const SphericalArrangement& b, bool reflection_equivalence) {
  if (a.graph().vertex_count() != b.graph().vertex_count() || a.graph().edge_count() != b.graph().edge_count()) {
    return false;
  }
  return certificate(a, reflection_equivalence) == certificate(b, reflection_equivalence);
}

}  // namespace spherelink

#include "m0k/reference.hpp"

#include <algorithm>

namespace m0k::reference {

std::vector<std::vector<Mask>> all_set_partitions(int n) {
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> blocks;
  auto rec = [&](auto&& self, int next) -> void {
    if (next == n) {
      out.push_back(blocks);
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i] |= bit(next);
      self(self, next + 1);
      blocks[i] &= ~bit(next);
    }
    blocks.push_back(bit(next));
    self(self, next + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  return out;
}

int min_face_partition_parts(const SimplicialComplex& k) {
  Mask full = k.ground().full_mask();
  auto faces = k.faces();
  int best = k.ground().size() + 1;
  auto rec = [&](auto&& self, Mask remaining, int parts) -> void {
    if (remaining == 0) {
      best = std::min(best, parts);
      return;
    }
    if (parts + 1 >= best) return;
    int low = lowest_bit(remaining);
    for (Mask f : faces) {
      if (f == 0 || !(f & bit(low)) || (f & ~remaining)) continue;
      self(self, remaining & ~f, parts + 1);
    }
  };
  rec(rec, full, 0);
  return best;
}

std::set<KStableGraph> brute_enumerate(const SimplicialComplex& k) {
  const GroundSet& g = k.ground();
  const Mask full = g.full_mask();
  std::set<KStableGraph> out;
  std::vector<Mask> sides;
  for (Mask s = 1; s < full; ++s)
    if (!(s & 1)) sides.push_back(s);

  for (const auto& part : all_set_partitions(g.size())) {
    std::vector<Mask> usable;
    for (Mask s : sides) {
      bool union_of_blocks = true;
      for (Mask b : part) {
        Mask inter = b & s;
        if (inter != 0 && inter != b) {
          union_of_blocks = false;
          break;
        }
      }
      if (union_of_blocks) usable.push_back(s);
    }
    int m = static_cast<int>(usable.size());
    for (Mask sub = 0; sub < (Mask{1} << m); ++sub) {
      std::vector<Mask> splits;
      for (int i = 0; i < m; ++i)
        if (sub & bit(i)) splits.push_back(usable[i]);
      if (validate(k, part, splits).valid())
        out.insert(make_graph(g, part, splits));
    }
  }
  return out;
}

std::set<KStableGraph> gamma_structure_closure(const SimplicialComplex& k,
                                               const KStableGraph& base) {
  const GroundSet& g = k.ground();
  const Mask full = g.full_mask();
  auto verts = vertices(base);

  struct VertexChoice {
    std::vector<KStableGraph> subgraphs;
    std::vector<Mask> content;  // per induced ground element, pulled back to S
    int legs = 0;
  };
  std::vector<VertexChoice> choices;
  for (const auto& v : verts) {
    auto induced = induced_complex(k, base, v.id);
    VertexChoice c;
    c.subgraphs = enumerate_graphs(induced.complex, std::nullopt);
    c.legs = static_cast<int>(v.block_ids.size());
    for (std::size_t el = 0; el < induced.element_marks.size(); ++el) {
      if (induced.element_split[el] < 0) {
        c.content.push_back(induced.element_marks[el]);
      } else {
        Mask near = vertex_side_of_split(base, verts, v.id, induced.element_split[el]);
        c.content.push_back(full & ~near);
      }
    }
    choices.push_back(std::move(c));
  }

  std::set<KStableGraph> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  auto rec = [&](auto&& self, std::size_t vi) -> void {
    if (vi == choices.size()) {
      std::vector<Mask> blocks;
      std::vector<Mask> splits = base.splits;
      for (std::size_t w = 0; w < choices.size(); ++w) {
        const auto& choice = choices[w];
        const auto& sub = choice.subgraphs[pick[w]];
        for (Mask beta : sub.blocks) {
          bool touches_edge = (beta >> choice.legs) != 0;
          if (touches_edge) continue;  // singleton edge element, not a leg
          Mask marks = 0;
          for (int el = 0; el < choice.legs; ++el)
            if (beta & bit(el)) marks |= choice.content[el];
          blocks.push_back(marks);
        }
        for (Mask sigma : sub.splits) {
          Mask side = 0;
          for (int el = 0; el < static_cast<int>(choice.content.size()); ++el)
            if (sigma & bit(el)) side |= choice.content[el];
          splits.push_back(side);
        }
      }
      out.insert(make_graph(g, blocks, splits));
      return;
    }
    for (pick[vi] = 0; pick[vi] < choices[vi].subgraphs.size(); ++pick[vi])
      self(self, vi + 1);
  };
  rec(rec, 0);
  return out;
}

}  // namespace m0k::reference

#include "treelang/dyck.hpp"

#include <cctype>
#include <stdexcept>

namespace treelang {

bool validate_dyck(std::string_view letters) {
  int height = 0;
  for (char ch : letters) {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (c == 'u') {
      ++height;
    } else if (c == 'd') {
      if (--height < 0) return false;
    } else {
      return false;
    }
  }
  return height == 0;
}

DyckWord parse_dyck(std::string_view letters) {
  DyckWord w;
  w.reserve(letters.size());
  for (char ch : letters) {
    w.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (!validate_dyck(w)) throw std::invalid_argument("not a Dyck word");
  return w;
}

void visit_dyck(int n_edges, const std::function<void(const DyckWord&)>& fn) {
  if (n_edges < 0) throw std::invalid_argument("negative edge count");
  DyckWord w(2 * static_cast<std::size_t>(n_edges), 'u');
  // depth-first over prefixes, u before d, i.e. lexicographic with u < d
  std::function<void(int, int)> rec = [&](int ups, int downs) {
    if (ups + downs == 2 * n_edges) {
      fn(w);
      return;
    }
    if (ups < n_edges) {
      w[ups + downs] = 'u';
      rec(ups + 1, downs);
    }
    if (downs < ups) {
      w[ups + downs] = 'd';
      rec(ups, downs + 1);
    }
  };
  rec(0, 0);
}

std::vector<DyckWord> enumerate_dyck(int n_edges) {
  std::vector<DyckWord> out;
  visit_dyck(n_edges, [&](const DyckWord& w) { out.push_back(w); });
  return out;
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (int m = 0; m < n; ++m) {
    BigInt s = 0;
    for (int i = 0; i <= m; ++i) s += c[i] * c[m - i];
    c[m + 1] = s;
  }
  return c[n];
}

PlanarTree dyck_to_planar_tree(std::string_view word) {
  DyckWord w = parse_dyck(word);
  TreeBuilder b;
  for (char c : w) {
    if (c == 'u') {
      b.push_child();
    } else {
      b.ascend();
    }
  }
  return b.tree();
}

DyckWord planar_tree_to_dyck(const PlanarTree& tree) {
  DyckWord out;
  out.reserve(2 * static_cast<std::size_t>(tree.n_edges()));
  std::function<void(int)> visit = [&](int v) {
    for (int c : tree.children(v)) {
      out.push_back('u');
      visit(c);
      out.push_back('d');
    }
  };
  visit(0);
  return out;
}

std::map<TreeCanonicalForm, std::int64_t> p_multiplicity(int n_edges) {
  std::map<TreeCanonicalForm, std::int64_t> counts;
  visit_dyck(n_edges, [&](const DyckWord& w) {
    ++counts[canonical_unrooted(dyck_to_planar_tree(w))];
  });
  return counts;
}

}  // namespace treelang

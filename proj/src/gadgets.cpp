#include "eeh/gadgets.hpp"

#include <stdexcept>

namespace eeh {

namespace {

using Triple = std::array<const char*, 3>;

// Each list is pinned by the f-vector, free-edge and horn checks in the
// test suite.
constexpr std::array<Triple, 17> kDunceHat{{
    {"1", "3", "6"}, {"3", "6", "7"}, {"2", "3", "7"}, {"1", "2", "7"}, {"1", "7", "8"},
    {"1", "2", "8"}, {"2", "3", "8"}, {"3", "4", "8"}, {"1", "3", "4"}, {"1", "2", "4"},
    {"2", "4", "5"}, {"2", "3", "5"}, {"1", "3", "5"}, {"1", "5", "6"}, {"4", "5", "6"},
    {"4", "6", "7"}, {"4", "7", "8"},
}};

constexpr std::array<Triple, 13> kModifiedDunceHat{{
    {"1", "3", "4"}, {"3", "4", "5"}, {"2", "3", "5"}, {"1", "2", "5"}, {"1", "5", "6"},
    {"1", "2", "6"}, {"2", "3", "6"}, {"3", "6", "7"}, {"2", "3", "7"}, {"1", "2", "7"},
    {"1", "4", "7"}, {"4", "5", "6"}, {"4", "6", "7"},
}};

template <std::size_t N>
Complex from_triples(const std::array<Triple, N>& triples) {
  std::vector<Simplex> facets;
  facets.reserve(N);
  for (const auto& t : triples) facets.push_back(Simplex{t[0], t[1], t[2]});
  return Complex::from_facets(facets);
}

std::string indexed(char base, int i) { return std::string(1, base) + std::to_string(i); }

}  // namespace

Complex dunce_hat() { return from_triples(kDunceHat); }

Complex modified_dunce_hat() { return from_triples(kModifiedDunceHat); }

std::array<Move, 2> GadgetHandle::horns() const {
  const auto v = [this](const std::string& base) { return vertex(base); };
  const std::string xm = indexed('x', m);
  return {Move::expansion(Simplex{v("2"), v("5"), v("6")},
                          Simplex{v(xm), v("2"), v("5"), v("6")}),
          Move::expansion(Simplex{v("2"), v("6"), v("7")},
                          Simplex{v("x0"), v("2"), v("6"), v("7")})};
}

GadgetHandle gadget(int m, int l, std::string_view prefix) {
  if (m < 1) throw std::invalid_argument("gadget needs at least one free port (m >= 1)");
  if (l < 0) throw std::invalid_argument("gadget port count l must be nonnegative");

  GadgetHandle g;
  g.m = m;
  g.l = l;
  g.prefix = std::string(prefix);
  const auto v = [&](const std::string& base) { return g.vertex(base); };
  const auto x = [&](int i) { return v(indexed('x', i)); };

  // 3 -> x0 and 1 -> x_m; the remaining base vertices keep their names.
  const auto relabel = [&](const char* base) -> std::string {
    const std::string b(base);
    if (b == "3") return x(0);
    if (b == "1") return x(m);
    return v(b);
  };

  std::vector<Simplex> triangles;
  for (const auto& t : kModifiedDunceHat) {
    const std::string key = std::string(t[0]) + t[1] + t[2];
    if (key == "134") continue;  // replaced by the fan below
    if (l >= 1 && (key == "456" || key == "467")) continue;  // square is retriangulated
    triangles.push_back(Simplex{relabel(t[0]), relabel(t[1]), relabel(t[2])});
  }

  for (int i = 1; i <= m; ++i) {
    triangles.push_back(Simplex{v("4"), x(i - 1), x(i)});
    g.f_edges.push_back(Simplex{x(i - 1), x(i)});
  }

  for (int j = 1; j <= l; ++j) {
    const auto a = v(indexed('a', j)), b = v(indexed('b', j)), c = v(indexed('c', j)),
               d = v(indexed('d', j)), y = v(indexed('y', j)), z = v(indexed('z', j));
    // the disk around e_j
    triangles.push_back(Simplex{c, a, y});
    triangles.push_back(Simplex{c, y, z});
    triangles.push_back(Simplex{c, z, b});
    triangles.push_back(Simplex{d, a, y});
    triangles.push_back(Simplex{d, y, z});
    triangles.push_back(Simplex{d, z, b});
    // joins the disk boundary to 4 and 6
    triangles.push_back(Simplex{v("4"), c, a});
    triangles.push_back(Simplex{v("4"), a, d});
    triangles.push_back(Simplex{v("6"), c, b});
    triangles.push_back(Simplex{v("6"), b, d});
    // chain 5 -> c_1, d_j -> c_{j+1}, d_l -> 7
    if (j == 1) {
      triangles.push_back(Simplex{v("4"), v("5"), c});
      triangles.push_back(Simplex{v("5"), v("6"), c});
    }
    const auto next = j < l ? v(indexed('c', j + 1)) : v("7");
    triangles.push_back(Simplex{v("4"), d, next});
    triangles.push_back(Simplex{v("6"), d, next});
    g.e_edges.push_back(Simplex{y, z});
  }

  g.complex = Complex::from_facets(triangles);
  return g;
}

}  // namespace eeh

#include <doctest.h>

#include "eeh/complex.hpp"
#include "eeh/errors.hpp"
#include "eeh/gadgets.hpp"
#include "oracles.hpp"

using namespace eeh;

namespace {

oracle::Faces faces_of(const Complex& k) {
  oracle::Faces out;
  for (const auto& f : k.faces()) out.insert(f.vertices());
  return out;
}

Complex triangle() { return Complex::from_facets({Simplex({"1", "2", "3"})}); }

}  // namespace

TEST_CASE("closure of one triangle") {
  const auto k = triangle();
  CHECK(k.f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(k.dimension() == 2);
  CHECK(faces_of(k) == oracle::closure({{"1", "2", "3"}}));
  CHECK(k.facets() == std::vector<Simplex>{Simplex({"1", "2", "3"})});
}

TEST_CASE("single vertex and empty complex") {
  const auto v = Complex::from_facets({Simplex({"1"})});
  CHECK(v.dimension() == 0);
  CHECK(v.f_vector() == std::vector<std::size_t>{1});
  const Complex empty;
  CHECK(empty.dimension() == -1);
  CHECK(empty.empty());
  CHECK(is_one_dimensional(empty));
  CHECK(euler_characteristic(empty) == 0);
}

TEST_CASE("closure is idempotent and ignores non-maximal facets") {
  const auto p = modified_dunce_hat();
  const auto again = Complex::from_facets(p.faces());
  CHECK(again == p);
  CHECK(canonical_key(again) == canonical_key(p));
  CHECK(is_closed(p));
}

TEST_CASE("modified dunce hat f-vector against the naive closure") {
  const auto p = modified_dunce_hat();
  std::vector<oracle::Face> tris;
  for (const auto& t : p.faces(2)) tris.push_back(t.vertices());
  CHECK(oracle::f_vector(oracle::closure(tris)) == std::vector<std::size_t>{7, 19, 13});
  CHECK(p.f_vector() == std::vector<std::size_t>{7, 19, 13});
}

TEST_CASE("free faces") {
  SUBCASE("dunce hat has none") { CHECK(free_faces(dunce_hat(), 2).empty()); }
  SUBCASE("modified dunce hat has exactly {1,3} in {1,3,4}") {
    const auto f = free_faces(modified_dunce_hat(), 2);
    REQUIRE(f.size() == 1);
    CHECK(f[0].face == Simplex({"1", "3"}));
    CHECK(f[0].coface == Simplex({"1", "3", "4"}));
  }
  SUBCASE("every edge of a lone triangle") {
    const auto f = free_faces(triangle(), 2);
    REQUIRE(f.size() == 3);
    CHECK(f[0].face == Simplex({"1", "2"}));
    CHECK(f[2].face == Simplex({"2", "3"}));
  }
  SUBCASE("agrees with coface counting") {
    for (const auto& k : {dunce_hat(), modified_dunce_hat(), gadget(2, 1).complex}) {
      std::vector<std::pair<oracle::Face, oracle::Face>> mine;
      for (const auto& ff : free_faces(k, 2)) mine.emplace_back(ff.face.vertices(), ff.coface.vertices());
      CHECK(mine == oracle::free_pairs(faces_of(k), 3));
    }
  }
}

TEST_CASE("apply_collapse") {
  SUBCASE("triangle loses an edge and itself") {
    const auto k = apply_collapse(triangle(), Move::collapse(Simplex({"1", "2"}), Simplex({"1", "2", "3"})));
    CHECK(faces_of(k) == oracle::closure({{"1", "3"}, {"2", "3"}}));
    CHECK(euler_characteristic(k) == 1);
  }
  SUBCASE("non-free edge of the dunce hat") {
    const auto d = dunce_hat();
    const auto m = Move::collapse(Simplex({"1", "7"}), Simplex({"1", "2", "7"}));
    CHECK_THROWS_AS(apply_collapse(d, m), InvalidMove);
    const auto why = move_violation(d, m);
    REQUIRE(why);
    CHECK(why->find("2 cofaces") != std::string::npos);
  }
  SUBCASE("missing faces and mismatched kinds") {
    CHECK_THROWS_AS(apply_collapse(triangle(), Move::collapse(Simplex({"1", "4"}), Simplex({"1", "2", "4"}))),
                    InvalidMove);
    CHECK_THROWS_AS(apply_collapse(triangle(), Move::expansion(Simplex({"1", "2"}), Simplex({"1", "2", "3"}))),
                    InvalidMove);
    const auto mismatched = Move::collapse(Simplex({"1", "2"}), Simplex({"1", "3", "4"}));
    REQUIRE(move_violation(triangle(), mismatched));
    CHECK(move_violation(triangle(), mismatched)->find("not a facet") != std::string::npos);
  }
  SUBCASE("modified dunce hat after the first expansion") {
    auto k = apply_expansion(modified_dunce_hat(),
                             Move::expansion(Simplex({"2", "5", "6"}), Simplex({"1", "2", "5", "6"})));
    k = apply_collapse(k, Move::collapse(Simplex({"1", "5", "6"}), Simplex({"1", "2", "5", "6"})));
    CHECK(k.f_vector() == std::vector<std::size_t>{7, 19, 13});
    CHECK_FALSE(k.contains(Simplex({"1", "5", "6"})));
  }
}

TEST_CASE("available_expansions") {
  SUBCASE("the two 3-expansions of the dunce hat") {
    const auto e = available_expansions(dunce_hat(), 3);
    REQUIRE(e.size() == 2);
    CHECK(e[0] == Move::expansion(Simplex({"2", "7", "8"}), Simplex({"1", "2", "7", "8"})));
    CHECK(e[1] == Move::expansion(Simplex({"3", "5", "6"}), Simplex({"1", "3", "5", "6"})));
  }
  SUBCASE("modified dunce hat offers both known expansions") {
    const auto e = available_expansions(modified_dunce_hat(), 3);
    CHECK(std::count(e.begin(), e.end(),
                     Move::expansion(Simplex({"2", "5", "6"}), Simplex({"1", "2", "5", "6"}))) == 1);
    CHECK(std::count(e.begin(), e.end(),
                     Move::expansion(Simplex({"2", "6", "7"}), Simplex({"2", "3", "6", "7"}))) == 1);
  }
  SUBCASE("single edge has no 2-expansion") {
    CHECK(available_expansions(Complex::from_facets({Simplex({"1", "2"})}), 2).empty());
  }
  SUBCASE("dimension below 2 is refused") {
    CHECK_THROWS_AS(available_expansions(triangle(), 1), std::invalid_argument);
  }
  SUBCASE("agrees with brute force over vertex subsets") {
    for (const auto& k : {dunce_hat(), modified_dunce_hat(), gadget(1, 1).complex}) {
      for (int d : {2, 3}) {
        std::vector<std::pair<oracle::Face, oracle::Face>> mine;
        for (const auto& m : available_expansions(k, d)) mine.emplace_back(m.free_face.vertices(), m.coface.vertices());
        CHECK(mine == oracle::horns(faces_of(k), static_cast<std::size_t>(d + 1)));
      }
    }
  }
}

TEST_CASE("apply_expansion") {
  const auto d = dunce_hat();
  const auto m = Move::expansion(Simplex({"2", "7", "8"}), Simplex({"1", "2", "7", "8"}));
  const auto k = apply_expansion(d, m);
  CHECK(k.f_vector() == std::vector<std::size_t>{8, 24, 18, 1});
  CHECK(euler_characteristic(k) == euler_characteristic(d));
  CHECK_THROWS_AS(apply_expansion(k, m), InvalidMove);
  CHECK(apply_collapse(k, Move::collapse(m.free_face, m.coface)) == d);

  SUBCASE("incomplete horn") {
    const auto bad = Move::expansion(Simplex({"1", "2", "3"}), Simplex({"1", "2", "3", "4"}));
    const auto why = move_violation(d, bad);
    REQUIRE(why);
    CHECK(why->find("horn incomplete") != std::string::npos);
  }
  SUBCASE("second modified dunce hat expansion") {
    const auto p2 = apply_expansion(modified_dunce_hat(),
                                    Move::expansion(Simplex({"2", "6", "7"}), Simplex({"2", "3", "6", "7"})));
    CHECK(p2.dimension() == 3);
  }
  SUBCASE("1-expansion adds a vertex") {
    const auto k1 = apply_expansion(triangle(), Move::expansion(Simplex({"9"}), Simplex({"1", "9"})));
    CHECK(k1.f_vector() == std::vector<std::size_t>{4, 4, 1});
    CHECK(is_closed(k1));
  }
}

TEST_CASE("canonical_key") {
  const auto p = modified_dunce_hat();
  auto facets = p.facets();
  std::reverse(facets.begin(), facets.end());
  CHECK(canonical_key(Complex::from_facets(facets)) == canonical_key(p));
  const auto e = available_expansions(p, 3).front();
  const auto q = apply_expansion(p, e);
  CHECK(canonical_key(q) != canonical_key(p));
  CHECK(canonical_key(apply_collapse(q, Move::collapse(e.free_face, e.coface))) == canonical_key(p));
}

TEST_CASE("star, induced subcomplex and Euler characteristic") {
  const auto p = modified_dunce_hat();
  const auto st = star(p, "2");
  for (const auto& t : st.faces(2)) CHECK(t.contains("2"));
  CHECK(st.faces(2).size() == 6);
  const std::vector<std::string> w{"1", "3", "4"};
  CHECK(induced_subcomplex(p, w).facets() == std::vector<Simplex>{Simplex({"1", "3", "4"})});
  CHECK_THROWS_AS(star(p, "99"), FormatError);
  CHECK_THROWS_AS(induced_subcomplex(p, std::vector<std::string>{"1", "99"}), FormatError);
  CHECK(euler_characteristic(p) == oracle::euler(faces_of(p)));
  CHECK(euler_characteristic(dunce_hat()) == 1);
  CHECK_FALSE(is_one_dimensional(p));
  CHECK(is_one_dimensional(Complex::from_facets({Simplex({"1", "2"}), Simplex({"2", "3"})})));
}

TEST_CASE("free faces and expansions are deterministic and always apply") {
  const auto k = gadget(2, 2).complex;
  CHECK(free_faces(k, 2) == free_faces(k, 2));
  for (const auto& ff : free_faces(k, 2)) CHECK(is_closed(apply_collapse(k, ff.as_collapse())));
  for (int d : {2, 3}) {
    for (const auto& m : available_expansions(k, d)) CHECK(is_closed(apply_expansion(k, m)));
  }
}

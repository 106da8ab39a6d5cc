#include <doctest.h>

#include <set>

#include "nbraid/presentations.hpp"

using namespace nbraid;

namespace {

bool has_relator(const Presentation& p, const std::string& text) {
  Word w = parse_word(text);
  for (const auto& r : p.relators)
    if (r == w) return true;
  return false;
}

} // namespace

TEST_CASE("group spec mini-language round-trips") {
  for (const char* s : {"closed:g=2,n=3", "bordered:g=2,b=1,n=3",
                        "surface:g=4", "free:rank=2"}) {
    CHECK(GroupSpec::parse(s).str() == s);
  }
  CHECK_THROWS_AS(GroupSpec::parse("closed:g=2"), Error);
  CHECK_THROWS_AS(GroupSpec::parse("closed:g=2,n=2,b=1"), Error);
  CHECK_THROWS_AS(GroupSpec::parse("ring:g=2"), Error);
  CHECK_THROWS_AS(GroupSpec::parse("closed:g=two,n=2"), Error);
}

TEST_CASE("closed genus-2 two-strand presentation") {
  Presentation p = closed_braid(2, 2);
  REQUIRE(p.generators.size() == 5);
  CHECK(format_symbol(p.generators[0]) == "B[1,2]");
  CHECK(format_symbol(p.generators[1]) == "r[1,1]");
  CHECK(format_symbol(p.generators[2]) == "r[1,2]");
  CHECK(format_symbol(p.generators[3]) == "r[2,1]");
  CHECK(format_symbol(p.generators[4]) == "r[2,2]");

  CHECK(p.relators.size() == 8);
  CHECK(has_relator(p, "r[1,1]^2 r[1,2]^2 B[1,2]^-1"));
  CHECK(has_relator(p, "r[2,1]^2 r[2,2]^2 B[1,2]^-1"));
}

TEST_CASE("single-strand and boundary cases are free groups") {
  CHECK(bordered_braid(1, 1, 1).relators.empty());
  CHECK(bordered_braid(1, 1, 1).generators.size() == 1);

  Presentation p = bordered_braid(2, 2, 1);
  CHECK(p.relators.empty());
  REQUIRE(p.generators.size() == 3);
  CHECK(format_symbol(p.generators[0]) == "r[1,1]");
  CHECK(format_symbol(p.generators[1]) == "r[1,2]");
  CHECK(format_symbol(p.generators[2]) == "x[1,1]");

  CHECK(closed_braid(2, 1).relators.size() == 1);
  CHECK(has_relator(closed_braid(2, 1), "r[1,1]^2 r[1,2]^2"));
}

TEST_CASE("boundary generator conjugation relator") {
  Presentation p = bordered_braid(2, 2, 2);
  CHECK(has_relator(
      p, "x[1,1] x[2,1] x[1,1]^-1 "
         "x[2,1]^-1 B[1,2] x[2,1]^-1 B[1,2]^-1 x[2,1]"));
}

TEST_CASE("surface group presentation") {
  Presentation p = surface_group(2);
  REQUIRE(p.relators.size() == 1);
  CHECK(format_word(p.relators[0]) == "p[1]^2 p[2]^2");
  CHECK_THROWS_AS(surface_group(1), Error);
}

TEST_CASE("unsupported families are rejected") {
  CHECK_THROWS_AS(closed_braid(1, 2), Error);
  CHECK_THROWS_AS(closed_braid(2, 0), Error);
  CHECK_THROWS_AS(bordered_braid(0, 1, 2), Error);
  CHECK_THROWS_AS(bordered_braid(2, 0, 2), Error);
  try {
    closed_braid(1, 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported);
  }
}

TEST_CASE("named elements of the closed braid groups") {
  GroupSpec c23 = GroupSpec::closed(2, 3);
  CHECK(format_word(elem_T(c23, 2)) == "B[1,2] B[2,3]");
  CHECK(format_word(elem_T(c23, 1)) == "B[1,2] B[1,3]");
  CHECK(format_word(elem_U(c23)) == "r[3,1] r[3,2] r[2,1] r[2,2]");
  CHECK(format_word(elem_a(c23, 2)) == "r[2,1] r[2,2]");
  CHECK(elem_U(GroupSpec::closed(2, 1)).empty());
}

TEST_CASE("section images of the boundary generators") {
  GroupSpec c22 = GroupSpec::closed(2, 2);
  CHECK(format_word(sigma_image(c22, 2)) == "r[1,2] B[1,2]^-1");
  CHECK(format_word(sigma_image(c22, 1)) == "r[2,1] r[2,2] r[1,1]");

  GroupSpec c32 = GroupSpec::closed(3, 2);
  CHECK(format_word(sigma_image(c32, 1)) ==
        "r[1,1] r[2,3]^-1 r[2,2]^-1");

  // the projection kills the section up to free reduction
  for (auto spec : {c22, c32, GroupSpec::closed(4, 3)}) {
    for (int i = 1; i <= spec.g; ++i) {
      Word expect = letter_word(sym_p(i));
      CHECK(lambda_image(sigma_image(spec, i)) == expect);
    }
  }
}

TEST_CASE("projection to the surface group") {
  Word w = parse_word("r[1,2] B[1,3] r[2,1]");
  CHECK(format_word(lambda_image(w)) == "p[2]");
  CHECK(lambda_image(parse_word("B[1,2] r[2,1]^-1")).empty());
}

TEST_CASE("conjugation rules match the frozen samples") {
  CHECK(format_word(conjugation_rhs(sym_rho(1, 1), sym_B(2, 3))) ==
        "B[2,3]");
  CHECK(format_word(conjugation_rhs(sym_rho(1, 1), sym_rho(3, 1))) ==
        "r[3,1]^-1 B[1,3]^-1 r[3,1]^2");
  CHECK(format_word(conjugation_rhs(sym_B(1, 2), sym_B(1, 3))) ==
        "B[2,3]^-1 B[1,3] B[2,3]");
  CHECK_THROWS_AS(conjugation_rhs(sym_rho(3, 1), sym_B(1, 2)), Error);
  CHECK_THROWS_AS(conjugation_rhs(sym_B(1, 3), sym_B(1, 3)), Error);
}

TEST_CASE("relators only use declared generators") {
  for (auto spec : {GroupSpec::closed(2, 3), GroupSpec::closed(3, 2),
                    GroupSpec::bordered(2, 2, 3),
                    GroupSpec::bordered(1, 3, 2)}) {
    Presentation p = presentation(spec);
    std::set<GeneratorSymbol> gens(p.generators.begin(),
                                   p.generators.end());
    for (const auto& r : p.relators)
      for (const auto& l : r.letters()) CHECK(gens.count(l.sym) == 1);
  }
}

TEST_CASE("presentation JSON shape") {
  std::string j = presentation_json(closed_braid(2, 2));
  CHECK(j.find("\"spec\":\"closed:g=2,n=2\"") != std::string::npos);
  CHECK(j.find("\"generators\":[\"B[1,2]\",\"r[1,1]\",\"r[1,2]\",\"r[2,1]\","
               "\"r[2,2]\"]") != std::string::npos);
  CHECK(j.find("r[1,1]^2 r[1,2]^2 B[1,2]^-1") != std::string::npos);
}

TEST_CASE("klein bottle presentation") {
  Presentation k = klein_bottle();
  REQUIRE(k.generators.size() == 2);
  REQUIRE(k.relators.size() == 1);
  CHECK(format_word(k.relators[0]) == "a b a^-1 b");
  CHECK_THROWS_AS(
      ad_hoc("bad", {sym_abstract("a")}, {parse_word("a c")}), Error);
}

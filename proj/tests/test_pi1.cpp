#include <doctest.h>

#include <random>

#include "nbraid/pi1.hpp"
#include "nbraid/presentations.hpp"

using namespace nbraid;

namespace {

Word surf_relator(int g) {
  Word w;
  for (int i = 1; i <= g; ++i) w = w * pow(letter_word(sym_p(i)), 2);
  return w;
}

Word random_p_word(std::mt19937_64& rng, int g, int len) {
  std::vector<Letter> ls;
  std::uniform_int_distribution<int> gen(1, g);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (int i = 0; i < len; ++i)
    ls.push_back({sym_p(gen(rng)), sgn(rng) ? 1 : -1});
  return Word(std::move(ls));
}

} // namespace

TEST_CASE("klein bottle pair arithmetic") {
  CHECK(klein_pair(surf_relator(2)) == std::pair<long, long>{0, 0});
  CHECK(klein_pair(parse_word("p[1]")) == std::pair<long, long>{0, 1});
  CHECK(klein_pair(parse_word("[p[1], p[2]]")) ==
        std::pair<long, long>{2, 0});
  CHECK(klein_pair_ab(parse_word("a b a^-1 b")) ==
        std::pair<long, long>{0, 0});
  CHECK(klein_pair_ab(parse_word("b a b a^-1")) ==
        std::pair<long, long>{0, 0}); // b (a b a^-1) = b b^-1
  CHECK(klein_pair_ab(parse_word("[a, b]")) ==
        std::pair<long, long>{2, 0}); // conjugation by a inverts b
  CHECK(klein_pair_ab(parse_word("b^3")) == std::pair<long, long>{3, 0});
}

TEST_CASE("genus 2 triviality") {
  CHECK(pi1_is_trivial(surf_relator(2), 2));
  CHECK(pi1_is_trivial(Word{}, 2));
  CHECK(!pi1_is_trivial(parse_word("p[1]"), 2));
  CHECK(!pi1_is_trivial(parse_word("[p[1], p[2]]"), 2));
  CHECK(pi1_is_trivial(conjugated(surf_relator(2), parse_word("p[2] p[1]")),
                       2));
}

TEST_CASE("triviality for genus 3 through the double cover") {
  CHECK(pi1_is_trivial(surf_relator(3), 3));
  CHECK(!pi1_is_trivial(parse_word("p[1]"), 3));
  CHECK(!pi1_is_trivial(parse_word("p[3]^-1"), 3));
  CHECK(!pi1_is_trivial(parse_word("[p[1], p[2]]"), 3));
  CHECK(!pi1_is_trivial(parse_word("p[1]^2 p[2]^2"), 3));
  CHECK(pi1_is_trivial(conjugated(surf_relator(3), parse_word("p[3] p[2]^-1")),
                       3));
}

TEST_CASE("triviality for genus >= 4 by small cancellation") {
  for (int g : {4, 5}) {
    CHECK(pi1_is_trivial(surf_relator(g), g));
    CHECK(!pi1_is_trivial(parse_word("p[1]"), g));
    CHECK(!pi1_is_trivial(parse_word("[p[1], p[4]]"), g));
    CHECK(pi1_is_trivial(
        conjugated(surf_relator(g), parse_word("p[4]^-1 p[2]")), g));
  }
}

TEST_CASE("products of relator conjugates die, random words rarely do") {
  std::mt19937_64 rng(20260816);
  for (int g : {2, 3, 4}) {
    const Word r = surf_relator(g);
    for (int trial = 0; trial < 25; ++trial) {
      Word w;
      for (int f = 0; f < 3; ++f) {
        const Word c = random_p_word(rng, g, 4);
        const int e = (rng() & 1) ? 1 : -1;
        w = w * conjugated(pow(r, e), c);
      }
      CHECK(pi1_is_trivial(w, g));
      // inserting a relator never changes a verdict
      const Word probe = random_p_word(rng, g, 5);
      const Word spliced =
          probe * conjugated(r, random_p_word(rng, g, 3)) * inverse(probe);
      CHECK(pi1_is_trivial(spliced, g));
    }
  }
}

TEST_CASE("equality in the surface group") {
  // the last pair of squares is the inverse of the rest of the relator
  for (int g : {2, 3, 4}) {
    Word head;
    for (int i = 1; i < g; ++i) head = head * pow(letter_word(sym_p(i)), 2);
    const Word tail = pow(letter_word(sym_p(g)), -2);
    CHECK(pi1_equal(head, tail, g));
    CHECK(!pi1_equal(head, tail * parse_word("p[1]"), g));
  }
}

TEST_CASE("unsupported genus and alien letters are rejected") {
  CHECK_THROWS_AS(pi1_is_trivial(parse_word("p[1]"), 1), Error);
  CHECK_THROWS_AS(pi1_is_trivial(parse_word("p[3]"), 2), Error);
  CHECK_THROWS_AS(pi1_is_trivial(parse_word("B[1,2]"), 4), Error);
}

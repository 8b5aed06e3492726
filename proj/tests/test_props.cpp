#include <doctest.h>

#include "braidld/error.hpp"
#include "braidld/props.hpp"
#include "braidld/sampling.hpp"

using namespace braidld;

TEST_CASE("suite names") {
  CHECK(suite_names().size() == 11);
  CHECK(is_suite("sigma-n"));
  CHECK_FALSE(is_suite("sigma"));
  CHECK_THROWS_AS(prop_run("nope", 1, 0), InvalidArgument);
}

TEST_CASE("documented suite runs report zero failures") {
  auto sigma = prop_run("sigma-n", 200, 42);
  CHECK(sigma.failures == 0);
  CHECK(sigma.cases == 200);
  CHECK_FALSE(sigma.first_failure);

  auto ld = prop_run("bracket-ld", 200, 7);
  CHECK(ld.failures == 0);

  auto rel = prop_run("relations", 0, 0);
  CHECK(rel.failures == 0);
  // 30 ordered pairs (i, j), i != j <= 6, on g0..g8
  CHECK(rel.cases == 30 * 9);
}

TEST_CASE("every suite passes a short run") {
  for (auto name : suite_names()) {
    CAPTURE(name);
    auto report = prop_run(name, 30, 3);
    CHECK(report.failures == 0);
    CHECK(report.ok() == !report.first_failure.has_value());
  }
}

TEST_CASE("runs are deterministic in the seed") {
  auto a = prop_run("phi-square", 50, 9);
  auto b = prop_run("phi-square", 50, 9);
  CHECK(render(a) == render(b));
  Sampler s1(mix_seed(5, 1)), s2(mix_seed(5, 1)), s3(mix_seed(5, 2));
  auto    w1 = s1.braid_word(10, 4);
  CHECK(w1 == s2.braid_word(10, 4));
}

TEST_CASE("cap hits are counted as inconclusive") {
  auto report = prop_run("sigma-n", 50, 1, ActionConfig{4});
  CHECK(report.inconclusive > 0);
  CHECK(report.failures == 0);
}

TEST_CASE("samplers respect their bounds") {
  Sampler s(123);
  for (int k = 0; k < 200; ++k) {
    auto p = s.sigma_positive(2, 9, 5);
    CHECK(p.size() >= 1);
    CHECK(p.size() <= 9);
    CHECK(max_index(p) <= 5);
    CHECK(sigma_decompose(p, 2).has_value());

    auto f = s.free_word(Alphabet::X, 8, 4, {Letter::x(3), Letter::x(4, -1)});
    REQUIRE(f.size() >= 2);
    CHECK(f[0] == Letter::x(3));
    CHECK(f[1] == Letter::x(4, -1));
    CHECK(f.size() <= 8);

    auto t = s.term(7);
    CHECK(t.size() >= 1);
    CHECK(t.size() <= 7);
  }
}

TEST_CASE("render") {
  RunReport r{"xi", 3, 1, 0, 9, std::string("case 2: boom")};
  CHECK(render(r)
        == "suite: xi\ncases: 3\nfailures: 1\ninconclusive: 0\nseed: 9\n"
           "first failure: case 2: boom\n");
}

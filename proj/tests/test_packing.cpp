#include "doctest.h"
#include "ribbonlab/packing.hpp"

using namespace ribbon;

namespace {
Ribbon R(const char* s) { return parse_ribbon(s); }
}

TEST_CASE("element enumeration") {
  CHECK(enumerate_elements(alpha0()).empty());
  auto one = enumerate_elements(R("(1+,2-)"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].kind == ElementKind::ZeroGon);
  Ribbon alt = R("(1+,3+,2+,4+)");
  for (const auto& e : enumerate_elements(alt)) {
    CHECK(e.kind == ElementKind::IsoGon);
    CHECK(e.twice_level == 5);
    CHECK(odd_components(alt, e));
  }
}

TEST_CASE("oracle minimum") {
  CHECK(oracle_invariant(R("(1+,6+,2-,4+,3+,5-)"), Kind::Gamma) == 2);
  CHECK(oracle_invariant(R("(1-,3-,2-,4-)"), Kind::Gamma) == 3);
  CHECK(oracle_invariant(R("(1-,5+,3+,6+,2-,7+,4+,8+)"), Kind::GammaExt) == 1);
  CHECK(count_packings(R("(1+,2-)")) == 1);
  CHECK(count_packings(alpha0()) == 1);
}

TEST_CASE("ladders") {
  Ribbon lad = R("(1+,3+,2+,5+,4+,7+,6+,8+)");
  CHECK(count_packings(lad) == 1);
  CHECK(compression(lad) == 0);
  for (int n = 4; n <= 8; n += 2) {
    std::vector<int> v(n);
    v[0] = 1;
    for (int k = 1; 2 * k < n; ++k) {
      v[2 * k - 1] = 2 * k + 1;
      v[2 * k] = 2 * k;
    }
    v[n - 1] = n;
    CHECK(count_free_extensions(v) == (1u << (n / 2 - 1)));
  }
  CHECK(count_free_extensions({1, 2}) == 1);
}

TEST_CASE("alternation compression") {
  CHECK(compression(R("(1+,6+,2+,4+,3+,5+)")) == 1);
  CHECK(compression(R("(1+,8+,2+,7+,3+,6+,4+,5+)")) == 2);
}

TEST_CASE("emitted packings pass the independent checker") {
  Ribbon a = R("(1+,6+,2-,4+,3-,5+)");
  PackingOracle o(a);
  int seen = 0;
  o.for_each([&](const Packing& p) {
    CHECK(o.is_packing(p.elements));
    CHECK(o.weights_of(p)[0] <= 3 * a.n() / 2 - 1);
    auto j = o.packing_json(p);
    CHECK(j.find("\"elements\"") != std::string::npos);
    ++seen;
    return true;
  });
  CHECK(seen == static_cast<int>(o.summarize().packings));
}

TEST_CASE("saddle counts") {
  Ribbon a = R("(1+,3+,2-,4+)");
  OracleSummary s = PackingOracle(a).summarize();
  CHECK(s.min_nondeg_saddles == 0);
  CHECK(s.max_nondeg_saddles == 1);
}

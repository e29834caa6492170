#include <doctest.h>

#include "ggf/identities.hpp"

using namespace ggf;

namespace {

bool holds(const IdentityPair& p) { return check_identity(p.first, p.second); }

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("alternating Pochhammer-quotient sums telescope") {
    for (int n = 1; n <= 3; ++n) {
      CHECK(holds(identity_poch_sum_odd(n, 30)));
      CHECK(holds(identity_poch_sum_even(n, 30)));
      CHECK(holds(identity_poch_sum_odd_weighted(n, 30)));
      CHECK(holds(identity_poch_sum_even_weighted(n, 30)));
    }
  }

  TEST_CASE("check_identity rejects mismatched sides") {
    // Negative control: the odd and even right sides have different constant
    // terms (1 vs 0), so crossing them must fail.
    IdentityPair odd = identity_poch_sum_odd(1, 30);
    IdentityPair even = identity_poch_sum_even(1, 30);
    CHECK(!check_identity(odd.second, even.second));
  }

  TEST_CASE("alternating binomial sums collapse") {
    // Polynomial identities: degree is at most C(n,2)+n, so N=60 is exact
    // through n=8.
    for (int n = 0; n <= 8; ++n) {
      CHECK(holds(identity_binom_alternating(n, 60)));
      CHECK(holds(identity_binom_alternating_weighted(n, 60)));
      CHECK(holds(identity_chu_vandermonde_limit(n, 60)));
      CHECK(holds(identity_chu_vandermonde_zero(n, 60)));
    }
  }

  TEST_CASE("quotient-form binomial matches the Pascal recurrence") {
    for (int n = 0; n <= 6; ++n)
      for (int j = 0; j <= n; ++j)
        CHECK(qbinomial_by_formula(n, j, 40) == qbinomial(n, j, 40));
  }

  TEST_CASE("quotient-form binomial vanishes above the top index") {
    CHECK(qbinomial_by_formula(3, 5, 20) == TruncatedSeries(20));
    CHECK(qbinomial_by_formula(0, 1, 20) == TruncatedSeries(20));
  }
}

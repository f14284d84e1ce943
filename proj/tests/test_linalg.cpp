#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "negwit/errors.hpp"
#include "negwit/linalg.hpp"
#include "negwit/rng.hpp"
#include "test_helpers.hpp"

using namespace negwit;

TEST_CASE("matmul: identity and involution") {
  RngStream rng(101);
  const ComplexMatrix x = test::random_complex(2, 2, rng);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs(ComplexMatrix(matmul(id, x) - x)) == 0.0);

  ComplexMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(max_abs(ComplexMatrix(matmul(swap, swap) - id)) == 0.0);
}

TEST_CASE("matmul: matches triple-loop oracle on random 3x3 pair") {
  RngStream rng(102);
  const ComplexMatrix a = test::random_complex(3, 3, rng);
  const ComplexMatrix b = test::random_complex(3, 3, rng);
  CHECK(max_abs(ComplexMatrix(matmul(a, b) - test::matmul_oracle(a, b))) < 1e-13);
}

TEST_CASE("matmul: dimension mismatch throws") {
  RngStream rng(103);
  const ComplexMatrix a = test::random_complex(2, 3, rng);
  const ComplexMatrix b = test::random_complex(2, 2, rng);
  CHECK_THROWS_AS(matmul(a, b), std::invalid_argument);
}

TEST_CASE("dagger: definition and round trip") {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, 1), Complex(0, 0), Complex(0, 0);
  const ComplexMatrix md = dagger(m);
  CHECK(md(0, 0) == Complex(0, 0));
  CHECK(md(1, 0) == Complex(0, -1));
  CHECK(md(0, 1) == Complex(0, 0));

  RngStream rng(104);
  ComplexMatrix sym(3, 3);
  sym << 1, 2, 3, 2, 4, 5, 3, 5, 6;
  CHECK(max_abs(ComplexMatrix(dagger(sym) - sym)) == 0.0);

  const ComplexMatrix r = test::random_complex(4, 4, rng);
  CHECK(max_abs(ComplexMatrix(dagger(dagger(r)) - r)) == 0.0);
}

TEST_CASE("trace: identity, complex diagonal, random diagonal sum") {
  const int d = 5;
  CHECK(trace(ComplexMatrix(ComplexMatrix::Identity(d, d))) == Complex(d, 0));

  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag(0, 0) = Complex(1, 1);
  diag(1, 1) = Complex(2, -1);
  CHECK(trace(diag) == Complex(3, 0));

  RngStream rng(105);
  const ComplexMatrix r = test::random_complex(5, 5, rng);
  Complex expected = 0.0;
  for (int i = 0; i < 5; ++i) expected += r(i, i);
  CHECK(std::abs(trace(r) - expected) == 0.0);

  const ComplexMatrix rect = test::random_complex(2, 3, rng);
  CHECK_THROWS_AS(trace(rect), std::invalid_argument);
}

TEST_CASE("purity: projector, maximally mixed, non-square") {
  ComplexMatrix proj = ComplexMatrix::Zero(3, 3);
  proj(0, 0) = 1.0;
  CHECK(purity(proj) == doctest::Approx(1.0).epsilon(1e-14));

  const int d = 7;
  const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / double(d);
  CHECK(purity(mixed) == doctest::Approx(1.0 / d).epsilon(1e-14));

  RngStream rng(106);
  CHECK_THROWS_AS(purity(test::random_complex(2, 3, rng)), std::invalid_argument);
  CHECK_THROWS_AS(purity(test::random_complex(3, 3, rng)), std::invalid_argument);
}

TEST_CASE("hermitian_eigenvalues: known spectra") {
  ComplexMatrix diag = ComplexMatrix::Zero(3, 3);
  diag(0, 0) = 3.0;
  diag(1, 1) = 1.0;
  diag(2, 2) = 2.0;
  const Spectrum s = hermitian_eigenvalues(diag);
  REQUIRE(s.values.size() == 3);
  CHECK(s.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.values[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.values[2] == doctest::Approx(3.0).epsilon(1e-12));

  ComplexMatrix pauli_x(2, 2);
  pauli_x << 0, 1, 1, 0;
  const Spectrum sx = hermitian_eigenvalues(pauli_x);
  CHECK(sx.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(sx.values[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigenvalues: 2x2 closed-form oracle") {
  RngStream rng(107);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix h = test::random_hermitian(2, rng);
    const Spectrum s = hermitian_eigenvalues(h);
    const auto expected = test::hermitian_2x2_eigenvalues_oracle(h);
    CHECK(s.values[0] == doctest::Approx(expected[0]).epsilon(1e-10));
    CHECK(s.values[1] == doctest::Approx(expected[1]).epsilon(1e-10));
  }
}

TEST_CASE("hermitian_eigenvalues: trace and Frobenius invariants on random Hermitians") {
  RngStream rng(108);
  for (int d : {2, 5, 17}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix h = test::random_hermitian(d, rng);
      const Spectrum s = hermitian_eigenvalues(h);
      const double tr = h.trace().real();
      CHECK(std::abs(s.sum() - tr) <= 1e-9 * std::max(1.0, std::abs(tr)));
      const double fro2 = h.squaredNorm();
      CHECK(std::abs(s.sum_squares() - fro2) <= 1e-9 * std::max(1.0, fro2));
    }
  }
}

TEST_CASE("hermitian_eigenvalues: rejects non-Hermitian input, symmetrizes noise") {
  RngStream rng(109);
  CHECK_THROWS_AS(hermitian_eigenvalues(test::random_complex(3, 3, rng)),
                  std::invalid_argument);

  // Rounding-scale asymmetry is symmetrized away, not rejected.
  ComplexMatrix h = test::random_hermitian(4, rng);
  h(0, 1) += Complex(0.0, 1e-13);
  CHECK_NOTHROW(hermitian_eigenvalues(h));
}

TEST_CASE("qr_phase_corrected: identity, sign correction, reconstruction") {
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  const QrResult qi = qr_phase_corrected(id);
  CHECK(max_abs(ComplexMatrix(qi.q - id)) < 1e-14);
  CHECK(max_abs(ComplexMatrix(qi.r - id)) < 1e-14);

  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = -2.0;
  z(1, 1) = 3.0;
  const QrResult qd = qr_phase_corrected(z);
  CHECK(std::abs(qd.q(0, 0) - Complex(-1.0, 0.0)) < 1e-14);
  CHECK(std::abs(qd.q(1, 1) - Complex(1.0, 0.0)) < 1e-14);
  CHECK(qd.r(0, 0) == Complex(2.0, 0.0));
  CHECK(qd.r(1, 1) == Complex(3.0, 0.0));

  RngStream rng(110);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexMatrix g = test::random_complex(4, 4, rng);
    const QrResult qr = qr_phase_corrected(g);
    CHECK(max_abs(ComplexMatrix(qr.q * qr.r - g)) <= 1e-10 * std::max(1.0, max_abs(g)));
    CHECK(max_abs(ComplexMatrix(qr.q.adjoint() * qr.q - ComplexMatrix::Identity(4, 4))) <= 1e-10);
    for (int i = 0; i < 4; ++i) {
      CHECK(qr.r(i, i).imag() == 0.0);  // exactly as stored
      CHECK(qr.r(i, i).real() > 0.0);
      for (int j = 0; j < i; ++j) CHECK(qr.r(i, j) == Complex(0.0, 0.0));
    }
  }
}

TEST_CASE("qr_phase_corrected: rank deficiency throws") {
  ComplexMatrix z = ComplexMatrix::Zero(3, 3);
  z(0, 0) = 1.0;
  z(1, 1) = 1.0;  // third column identically zero
  CHECK_THROWS_AS(qr_phase_corrected(z), std::invalid_argument);
}

TEST_CASE("flatten_index: row-major convention and bijection") {
  CHECK(flatten_index(0, 0, 4) == 0);
  CHECK(flatten_index(1, 0, 2) == 2);
  CHECK_THROWS_AS(flatten_index(2, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(unflatten_index(4, 2), std::out_of_range);

  for (int d = 1; d <= 64; ++d) {
    std::vector<bool> seen(static_cast<std::size_t>(d) * d, false);
    for (int n = 0; n < d; ++n) {
      for (int m = 0; m < d; ++m) {
        const int k = flatten_index(n, m, d);
        REQUIRE(k >= 0);
        REQUIRE(k < d * d);
        REQUIRE(!seen[static_cast<std::size_t>(k)]);
        seen[static_cast<std::size_t>(k)] = true;
        const auto [rn, rm] = unflatten_index(k, d);
        REQUIRE(rn == n);
        REQUIRE(rm == m);
      }
    }
  }
}

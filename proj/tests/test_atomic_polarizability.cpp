#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "noncontact/atomic_polarizability.hpp"
#include "noncontact/data_io.hpp"
#include "noncontact/errors.hpp"
#include "oracles.hpp"

using namespace noncontact;

TEST_CASE("shipped atoms reproduce literature static polarizabilities") {
  const AtomModel h = io::load_atom("h_1s");
  const AtomModel he = io::load_atom("he_1s");
  const AtomModel he3 = io::load_atom("he_2s3");
  CHECK(std::abs(static_alpha(h) / 4.5 - 1.0) < 2e-2);
  CHECK(std::abs(static_alpha(he) / 1.383 - 1.0) < 2e-2);
  CHECK(std::abs(static_alpha(he3) / 315.6 - 1.0) < 5e-2);
  CHECK(oscillator_strength_sum(h) == doctest::Approx(1.0).epsilon(kTrkTolerance));
  CHECK(oscillator_strength_sum(he) == doctest::Approx(2.0).epsilon(kTrkTolerance));
  CHECK(first_resonance(h) == doctest::Approx(0.375));
  CHECK(first_resonance(he3) == doctest::Approx(0.0420618));
}

TEST_CASE("undamped alpha is real and rises below the first resonance") {
  for (auto name : io::builtin_atom_names()) {
    const AtomModel atom = io::load_atom(name);
    const double e1 = first_resonance(atom);
    double previous = alpha_undamped(atom, 0.0);
    CHECK(previous == doctest::Approx(static_alpha(atom)).epsilon(1e-14));
    for (int i = 1; i < 500; ++i) {
      const double w = e1 * i / 500.0;
      const double a = alpha_undamped(atom, w);
      CHECK(a > previous);
      CHECK(a == doctest::Approx(oracle::alpha_real(atom, w)).epsilon(1e-13));
      previous = a;
    }
  }
}

TEST_CASE("one-loop imaginary part") {
  for (auto name : io::builtin_atom_names()) {
    const AtomModel atom = io::load_atom(name);
    const double e1 = first_resonance(atom);
    for (int i = 0; i < 200; ++i) {
      const double w = 0.999 * e1 * i / 200.0;
      const double v = im_alpha_one_loop(atom, w);
      CHECK(v >= 0.0);
      if (w > 0.0) CHECK(v == doctest::Approx(oracle::im_alpha_loop(atom, w)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(im_alpha_one_loop(atom, e1), UnsupportedRegimeError);
    CHECK_THROWS_AS(im_alpha_one_loop(atom, 2.0 * e1), UnsupportedRegimeError);
    CHECK_THROWS_AS(im_alpha_one_loop(atom, -1e-3), DomainError);
  }
}

TEST_CASE("low-frequency resonant term matches the damped sum") {
  AtomModel atom{.name = "two-level",
                 .mass_kg = 1.0e-27,
                 .oscillators = {{0.7, 0.4, 4e-7}, {0.3, 0.9, 9e-7}},
                 .reference_static_alpha = 0.7 / 0.16 + 0.3 / 0.81,
                 .electrons = 1,
                 .skip_trk = false};
  REQUIRE_NOTHROW(validate(atom));
  for (double ratio : {1e-4, 1e-3, 1e-2, 0.02}) {
    const double w = ratio * 0.4;
    const double full = alpha(atom, w).imag();
    CHECK(std::abs(im_alpha_lowfreq_resonant(atom, w) / full - 1.0) < 1e-3);
  }
  // Up to 0.1 E_10 the linear form differs from the full sum by the
  // (1 - w^2/E^2)^-2 factor of the leading line.
  for (double ratio : {0.05, 0.099}) {
    const double w = ratio * 0.4;
    const double full = alpha(atom, w).imag();
    CHECK(std::abs(im_alpha_lowfreq_resonant(atom, w) / full - 1.0) < 2.2 * ratio * ratio);
  }
  CHECK(lowfreq_im_alpha_slope(atom) ==
        doctest::Approx(0.7 * 4e-7 / std::pow(0.4, 4) + 0.3 * 9e-7 / std::pow(0.9, 4)));
  CHECK_THROWS_AS(im_alpha_lowfreq_resonant(atom, 0.2), UnsupportedRegimeError);
}

TEST_CASE("complex alpha") {
  const AtomModel h = io::load_atom("h_1s");
  CHECK(alpha(h, 0.0) == std::complex<double>(static_alpha(h), 0.0));
  CHECK(alpha(h, 0.1).imag() > 0.0);
  CHECK(alpha(h, 0.1).real() == doctest::Approx(alpha_undamped(h, 0.1)).epsilon(1e-10));
}

TEST_CASE("validation") {
  AtomModel atom = io::load_atom("h_1s");
  CHECK_NOTHROW(validate(atom));

  AtomModel bad = atom;
  bad.oscillators[2].width = 0.1;
  CHECK_THROWS_AS(validate(bad), InvariantError);

  bad = atom;
  bad.reference_static_alpha = 6.0;
  CHECK_THROWS_AS(validate(bad), InvariantError);

  bad = atom;
  bad.electrons = 3;
  CHECK_THROWS_AS(validate(bad), InvariantError);

  bad = atom;
  bad.electrons.reset();
  CHECK_THROWS_AS(validate(bad), InvariantError);
  bad.skip_trk = true;
  CHECK_NOTHROW(validate(bad));

  bad = atom;
  bad.oscillators.clear();
  CHECK_THROWS_AS(validate(bad), InvariantError);

  bad = atom;
  bad.mass_kg = 0.0;
  CHECK_THROWS_AS(validate(bad), InvariantError);
}

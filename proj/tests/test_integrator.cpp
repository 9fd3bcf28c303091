#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rmz/renormalizer.hpp"
#include "rmz/rkf45.hpp"

using namespace rmz;

namespace {

double exponential_error(double rel_tol) {
  OdeProblem p;
  p.rhs = [](double, const Eigen::VectorXcd& y) { return Eigen::VectorXcd(-y); };
  p.t0 = 0.0;
  p.t1 = 1.0;
  p.y0 = Eigen::VectorXcd::Ones(1);
  p.rel_tol = rel_tol;
  p.abs_tol = 1e-14;
  const auto out = integrate(p);
  REQUIRE(out.status == IntegrateStatus::Completed);
  return std::abs(out.y(0) - std::exp(-1.0));
}

}  // namespace

TEST_CASE("exponential decay hits the closed form") {
  CHECK(exponential_error(1e-10) < 1e-8);
}

TEST_CASE("halving the tolerance reduces the global error") {
  const double coarse = exponential_error(2e-7);
  const double fine = exponential_error(1e-7);
  CHECK(fine * 2.0 <= coarse);
}

TEST_CASE("constant problems take few steps") {
  OdeProblem p;
  p.rhs = [](double, const Eigen::VectorXcd& y) {
    return Eigen::VectorXcd(Eigen::VectorXcd::Zero(y.size()));
  };
  p.t0 = 0.0;
  p.t1 = 10.0;
  p.y0 = Eigen::VectorXcd::Constant(3, Complex(1.0, -2.0));
  const auto out = integrate(p);
  CHECK(out.status == IntegrateStatus::Completed);
  CHECK((out.y - p.y0).norm() == 0.0);
  CHECK(out.accepted < 20);
}

TEST_CASE("burgers full system conserves energy under integration") {
  const auto t = Truncation::make(32, 1);
  BurgersKernel kernel(t);
  const auto u0 = ic_sine(t);
  OdeProblem p;
  p.rhs = [&](double, const Eigen::VectorXcd& y) {
    SpectralField f(t, 1);
    f.data() = y;
    return kernel.full_rhs(f).data();
  };
  p.t0 = 0.0;
  p.t1 = 0.5;
  p.y0 = u0.data();
  p.rel_tol = 1e-10;
  p.abs_tol = 1e-12;
  const auto out = integrate(p);
  REQUIRE(out.status == IntegrateStatus::Completed);
  const double e0 = u0.data().squaredNorm();
  const double e1 = out.y.squaredNorm();
  CHECK(std::abs(e1 - e0) < 1e-8);
}

TEST_CASE("identical problems integrate identically") {
  std::mt19937 rng(303);
  const auto t = Truncation::make(16, 1);
  BurgersKernel kernel(t);
  const auto u0 = oracle::random_full_state(t, 1, rng);
  const auto solve_once = [&]() {
    OdeProblem p;
    p.rhs = [&](double, const Eigen::VectorXcd& y) {
      SpectralField f(t, 1);
      f.data() = y;
      return kernel.full_rhs(f).data();
    };
    p.t0 = 0.0;
    p.t1 = 0.3;
    p.y0 = u0.data();
    return integrate(p);
  };
  const auto a = solve_once();
  const auto b = solve_once();
  CHECK(a.accepted == b.accepted);
  CHECK((a.y - b.y).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("finite-time blow-up is reported as non-finite") {
  // y' = y^2 from y(0) = 1 blows up at t = 1.
  OdeProblem p;
  p.rhs = [](double, const Eigen::VectorXcd& y) {
    return Eigen::VectorXcd(y.array().square().matrix());
  };
  p.t0 = 0.0;
  p.t1 = 2.0;
  p.y0 = Eigen::VectorXcd::Ones(1);
  p.rel_tol = 1e-8;
  const auto out = integrate(p);
  const bool aborted =
      out.status == IntegrateStatus::NonFinite || out.status == IntegrateStatus::StepUnderflow;
  CHECK(aborted);
  CHECK(out.t < 1.1);
}

TEST_CASE("callback can stop the run early") {
  OdeProblem p;
  p.rhs = [](double, const Eigen::VectorXcd& y) { return Eigen::VectorXcd(-y); };
  p.t0 = 0.0;
  p.t1 = 10.0;
  p.y0 = Eigen::VectorXcd::Ones(1);
  const auto out = integrate(p, [](double t, const Eigen::VectorXcd&) {
    return t > 1.0 ? StepControl::Stop : StepControl::Continue;
  });
  CHECK(out.status == IntegrateStatus::StoppedByCallback);
  CHECK(out.t > 1.0);
  CHECK(out.t < 10.0);
}

TEST_CASE("invalid problems are rejected") {
  OdeProblem p;
  p.rhs = [](double, const Eigen::VectorXcd& y) { return y; };
  p.t0 = 1.0;
  p.t1 = 0.5;
  p.y0 = Eigen::VectorXcd::Ones(1);
  CHECK_THROWS_AS(integrate(p), std::invalid_argument);
  p.t1 = 2.0;
  p.rel_tol = 0.0;
  CHECK_THROWS_AS(integrate(p), std::invalid_argument);
}

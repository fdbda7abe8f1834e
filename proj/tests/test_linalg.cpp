#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <numbers>

#include "qcap/linalg.hpp"
#include "test_support.hpp"

using namespace qcap;
using qcap::test::uniform;
using cd = std::complex<double>;

namespace {

Matrix3c random_well_conditioned() {
    Matrix3c a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = {uniform(-1, 1), uniform(-1, 1)};
    a += 4.0 * Matrix3c::Identity();  // diagonal dominance keeps cond(A) small
    return a;
}

Vector3c random_vector() {
    return Vector3c(cd(uniform(-1, 1), uniform(-1, 1)), cd(uniform(-1, 1), uniform(-1, 1)),
                    cd(uniform(-1, 1), uniform(-1, 1)));
}

}  // namespace

TEST_CASE("identity system returns the right-hand side") {
    const Vector3c b(cd(1, 2), cd(-3, 0.5), cd(0, -1));
    CHECK((complex_solve(Matrix3c::Identity(), b) - b).norm() == 0.0);
}

TEST_CASE("diagonal system") {
    Matrix3c a = Matrix3c::Zero();
    a(0, 0) = 2.0;
    a(1, 1) = cd(0, 4);
    a(2, 2) = -1.0;
    const Vector3c b(cd(1, 1), cd(2, -3), cd(0.5, 7));
    const Vector3c x = complex_solve(a, b);
    CHECK(std::abs(x(0) - b(0) / 2.0) < 1e-15);
    CHECK(std::abs(x(1) - cd(0, -1) * b(1) / 4.0) < 1e-15);
    CHECK(std::abs(x(2) + b(2)) < 1e-15);
}

TEST_CASE("pivoting handles a zero leading entry") {
    Matrix3c a;
    a << 0, 1, 2, 1, 0, 3, 4, -3, 8;
    const Vector3c b(1, 2, 3);
    const Vector3c x = complex_solve(a, b);
    CHECK((a * x - b).norm() < 1e-14);
}

TEST_CASE("singular systems are rejected") {
    Matrix3c a;
    a << 1, 2, 3, 2, 4, 6, 0, 1, 1;
    CHECK_THROWS_AS(complex_solve(a, Vector3c(1, 1, 1)), SingularSystem);
    Matrix3c nan_matrix = Matrix3c::Identity();
    nan_matrix(1, 1) = std::nan("");
    CHECK_THROWS_AS(complex_solve(nan_matrix, Vector3c(1, 1, 1)), SingularSystem);
}

TEST_CASE("property: residual and agreement with Eigen's LU over random systems") {
    for (int k = 0; k < test::kPropertyInstances; ++k) {
        const Matrix3c a = random_well_conditioned();
        const Vector3c b = random_vector();
        const Vector3c x = complex_solve(a, b);
        REQUIRE((a * x - b).norm() < 1e-12);
        const Vector3c reference = a.partialPivLu().solve(b);
        REQUIRE((x - reference).norm() < 1e-12 * (1.0 + reference.norm()));
    }
}

TEST_CASE("dynamic-size real systems") {
    for (int n : {1, 5, 40}) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Random(n, n) + n * Eigen::MatrixXd::Identity(n, n);
        Eigen::VectorXd b = Eigen::VectorXd::Random(n);
        const Eigen::VectorXd x = solve_partial_pivot(a, b);
        CHECK((a * x - b).norm() < 1e-12 * b.norm() * n);
    }
}

TEST_CASE("symmetric eigenvalues: closed forms") {
    Eigen::MatrixXd a(2, 2);
    a << 2, 1, 1, 2;
    const Eigen::VectorXd ev = symmetric_eigenvalues<double>(a);
    CHECK(ev(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ev(1) == doctest::Approx(3.0).epsilon(1e-14));

    Eigen::MatrixXd one(1, 1);
    one << -4.5;
    CHECK(symmetric_eigenvalues<double>(one)(0) == -4.5);

    // Path-graph Laplacian-like tridiagonal: eigenvalues 2 - 2 cos(k pi / (n + 1)).
    const int n = 30;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        t(i, i) = 2.0;
        if (i + 1 < n) t(i, i + 1) = t(i + 1, i) = -1.0;
    }
    const Eigen::VectorXd tv = symmetric_eigenvalues<double>(t);
    for (int k = 1; k <= n; ++k)
        CHECK(std::abs(tv(k - 1) - (2.0 - 2.0 * std::cos(k * std::numbers::pi / (n + 1)))) < 1e-13);
}

TEST_CASE("property: eigenvalues match Eigen's SelfAdjointEigenSolver") {
    for (int k = 0; k < 200; ++k) {
        const int n = 2 + k % 40;
        Eigen::MatrixXd r = Eigen::MatrixXd::Random(n, n);
        const Eigen::MatrixXd a = 0.5 * (r + r.transpose());
        const Eigen::VectorXd ours = symmetric_eigenvalues<double>(a);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a, Eigen::EigenvaluesOnly);
        REQUIRE((ours - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12 * (1.0 + a.norm()));
    }
}

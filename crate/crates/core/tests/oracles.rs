//! Reference values frozen from 40-digit arbitrary-precision evaluations.

use zetacert::bose_kernel::{kernel, kernel_base, kernel_ratio};
use zetacert::combinatorics::{binom, stirling2, BinomValue};
use zetacert::quad::{integrate_bose_moment, integrate_kernel_moment};
use zetacert::specfun::{eta, gamma, lambda, log_gamma, zeta, ZetaRoute};
use zetacert::verify::theorem1_ratio;

fn rel(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}

#[track_caller]
fn close(got: f64, want: f64, tol: f64) {
    assert!(
        rel(got, want) <= tol,
        "got {got:e}, want {want:e}, rel {:e}",
        rel(got, want)
    );
}

#[test]
fn gamma_reference_values() {
    let table = [
        (0.1, 9.5135076986687312858),
        (0.5, 1.7724538509055160273),
        (2.5, 1.3293403881791370205),
        (-0.5, -3.5449077018110320546),
        (-2.5, -0.94530872048294188123),
        (7.3, 1271.4236336639088399),
        (33.7, 3.0321626547398717871e36),
        (170.5, 5.5620924145599996107e305),
    ];
    for (x, want) in table {
        close(gamma(x).unwrap(), want, 1e-12);
    }
}

#[test]
fn log_gamma_reference_values() {
    let table = [
        (0.001, 6.9071788853838536617),
        (3.7, 1.4280723266653881292),
        (10.0, 12.801827480081469611),
        (100.25, 360.28455963776423497),
        (1e5, 1051287.7089736568949),
    ];
    for (x, want) in table {
        close(log_gamma(x).unwrap(), want, 1e-14);
    }
}

#[test]
fn zeta_reference_values_on_every_series_route() {
    let table = [
        (1.01, 100.57794333849678367),
        (1.5, 2.6123753486854883433),
        (2.0, 1.6449340668482264365),
        (2.5, 1.3414872572509171798),
        (3.0, 1.2020569031595942854),
        (7.3, 1.0067259864166135863),
        (25.0, 1.0000000298035035147),
        (60.0, 1.0000000000000000009),
    ];
    for route in ZetaRoute::SERIES {
        for (x, want) in table {
            close(zeta(x, route).unwrap(), want, 1e-14);
        }
    }
}

#[test]
fn eta_and_lambda_reference_values() {
    close(eta(2.0).unwrap(), 0.8224670334241132182, 1e-15);
    close(lambda(2.0).unwrap(), 1.2337005501361698274, 1e-15);
    close(eta(1.2).unwrap(), 0.72382719729374291162, 1e-14);
    close(eta(3.3).unwrap(), 0.91802731472526362073, 1e-14);
    close(lambda(1.2).unwrap(), 3.1577048192357473976, 1e-14);
    close(lambda(3.3).unwrap(), 1.0349860547230186671, 1e-14);
}

#[test]
fn kernel_reference_values() {
    close(kernel_base(50.0).unwrap(), 1.928749847963917783e-22, 1e-14);
    close(kernel_base(1e-8).unwrap(), 99999999.50000000083, 1e-15);
    let table = [
        (3, 0.25, 1536.008210001004369),
        (5, 1.5, 10.534387680481154017),
        (8, 2.0, 78.751240740603563217),
        (12, 0.7, 49438176526.751983878),
        (4, 40.0, 4.2483542552915892841e-18),
    ];
    for (k, t, want) in table {
        close(kernel(k, t).unwrap(), want, 1e-12);
    }
    close(kernel_ratio(2, 0.5).unwrap(), 6.0020229164085402878, 1e-13);
    close(kernel_ratio(3, 10.0).unwrap(), 1.0003631788318031162, 1e-14);
    close(kernel_ratio(1, 0.01).unwrap(), 200.0016666638888955, 1e-13);
}

#[test]
fn binomial_reference_values() {
    let table = [
        (7.5, 2.25, 29.780724018558358203),
        (-2.5, 3.0, -6.5625),
        (10.0, 3.5, 166.71933427325398961),
        (0.3, -0.7, 0.30000000000000005427),
    ];
    for (z, w, want) in table {
        match binom(z, w).unwrap() {
            BinomValue::Finite(v) => close(v, want, 1e-13),
            BinomValue::Infinite => panic!("binom({z}, {w}) diverged"),
        }
    }
}

#[test]
fn stirling_reference_values() {
    assert_eq!(stirling2(10, 4).unwrap().to_string(), "34105");
    assert_eq!(stirling2(25, 7).unwrap().to_string(), "227832482998716310");
    assert_eq!(
        stirling2(64, 32).unwrap().to_string(),
        "33947264920036857047043272494004974051302748746722615891173"
    );
    assert_eq!(stirling2(30, 15).unwrap().to_string(), "12879868072770626040000");
}

#[test]
fn zeta_ratio_reference_values() {
    close(theorem1_ratio(2.0, 1.0, 0).unwrap(), 2.1922889082043154962, 1e-14);
    close(theorem1_ratio(1.5, 0.5, 3).unwrap(), 1.6288926246134182519, 1e-13);
    close(theorem1_ratio(10.0, 2.5, 4).unwrap(), 295.33188759146134296, 1e-13);
    close(theorem1_ratio(3.3, 1.0, 1).unwrap(), 4.8966661742624826268, 1e-13);
    close(theorem1_ratio(1.0001, 1.0, 0).unwrap(), 3.2896552e-4, 1e-7);
    close(theorem1_ratio(40.0, 1.0, 0).unwrap(), 40.999999999981355, 1e-14);
}

#[test]
fn moment_reference_values() {
    close(
        integrate_bose_moment(3.5, 1e-12).unwrap().value,
        3.7445320913845908731,
        1e-12,
    );
    close(
        integrate_kernel_moment(0, 2.5, 1e-12).unwrap().value,
        3.7445320913845908731,
        1e-12,
    );
}

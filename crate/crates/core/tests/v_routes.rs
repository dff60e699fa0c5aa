use boundary_scope::v_function::*;
use boundary_scope::{c64, C64};
use std::f64::consts::PI;

// reference values computed independently at 30 digits
fn oracles() -> Vec<(C64, C64)> {
    vec![
        (c64(1.0, 0.0), c64(-0.0209681005476456923665, 0.0)),
        (c64(2.0, 0.0), c64(-0.00602848922803430390544, 0.0)),
        (c64(3.0, 0.0), c64(-0.00277099242714954447533, 0.0)),
        (c64(5.0, 0.0), c64(-0.00101657716084771485027, 0.0)),
        (c64(10.0, 0.0), c64(-0.000256286458676753330663, 0.0)),
        (c64(1.0, 1.0), c64(-0.00159777420430204938464, 0.0123673446087318681794)),
        (C64::from_polar(3.0, PI / 3.0), c64(0.00137440732534926170897, 0.00255110134646652112643)),
    ]
}

#[test]
fn every_route_matches_reference_values() {
    for (n, want) in oracles() {
        for route in [VRoute::Integral, VRoute::MellinBarnes, VRoute::LogGammaSum, VRoute::BorelLaplace] {
            let t = std::time::Instant::now();
            let got = v_by_route(n, route, 1e-13);
            match got {
                Ok(ev) => {
                    let err = (ev.value - want).norm();
                    eprintln!("{n} {:>14} err {err:.2e} ({:?})", route.name(), t.elapsed());
                    assert!(err < 1e-11, "{n} {}: {} vs {want}", route.name(), ev.value);
                }
                Err(e) => panic!("{n} {}: {e}", route.name()),
            }
        }
    }
}

use thzrelay::specfun::{delta_params, MeijerSpec};

pub fn moment_shaped(a1: usize, a2: usize, mu2: f64, phi: f64, mu1: f64, n: f64) -> MeijerSpec {
    let b1 = (a1 as f64 * mu1 - phi) / a1 as f64;
    let bb = (phi + 2.0 * n) / a1 as f64;
    let mut a = delta_params(a2, 1.0 - (bb - b1)).unwrap();
    a.extend(delta_params(a2, 1.0 - bb).unwrap());
    a.extend(delta_params(a1, 1.0).unwrap());
    let mut b = delta_params(a1, mu2).unwrap();
    b.extend(delta_params(a1, 0.0).unwrap());
    b.extend(delta_params(a2, -bb).unwrap());
    MeijerSpec::new(2 * a1, 2 * a2, a, b)
}

// (α1, α2, μ2, φ, μ1, n, z, G) against an independent 50-digit evaluation
pub const G_TABLE: &[(usize, usize, f64, f64, f64, f64, f64, f64)] = &[
    (2, 1, 2.0, 20.226165245115904, 0.75352700333639966, 2.0, 0.021352815463356934, 470140202932298688.64),
    (3, 1, 3.7, 8.0115490633985278, 0.80081531791210092, 1.0, 0.017558765649910522, 7.2712476697858608237),
    (1, 3, 2.0, 3.6550941702116964, 2.4790879296757788, 0.0, 1.6113530485481266, 0.33322550159458573608),
    (3, 1, 3.7, 18.39515983393083, 0.67356259686420006, 0.0, 0.014555910687302119, 1681877.589719100004),
    (1, 2, 2.0, 6.0391423340082504, 0.91227283327428932, 1.0, 0.91390377143078244, 74.239606032948633726),
    (3, 1, 0.5, 18.284804582549054, 2.7361971412416444, 1.0, 0.021928403601691297, 51991.918934202533479),
    (3, 1, 3.7, 3.6688327590545144, 1.2208554948676429, 2.0, 0.72614083960692374, 0.23803047557772178736),
    (2, 2, 3.7, 27.856358741888123, 1.7655382458059821, 0.0, 6.0301509716346006, 48914154.378317115322),
    (3, 1, 0.5, 18.083863887242789, 2.33818776334008, 1.0, 3.5732097720990023, 39.317229602295646041),
    (2, 3, 0.5, 5.3058417911389393, 1.9634298762482951, 1.0, 0.034036576526015109, 1.2259722349714324956),
];

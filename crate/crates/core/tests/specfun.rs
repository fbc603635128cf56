use proptest::prelude::*;
use thzrelay::specfun::*;

mod common;
use common::{moment_shaped, G_TABLE};

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

// reference values computed with 40-digit arithmetic
const UPPER: &[(f64, f64, f64)] = &[
    (14.0, 0.019878148943787997, 6227020800.0),
    (-0.5, 0.3964093208483099, 0.8138422807215764852),
    (2.3983802329190005, 0.00010841876192367491, 1.240857224057441903),
    (-2.49849219424509, 0.22217055126824892, 12.13567322124700971),
    (-3.4249601530214733, 0.3538650704203855, 6.3264074796263135514),
    (-0.5939394352251428, 0.0002446359726074639, 231.5094363753295119),
    (1.0, 0.0024095806868670725, 0.9975933200223774465),
    (-2.1587636174576263, 0.4722037892615344, 1.1068236231478895832),
    (16.578115820664685, 0.6026316886050134, 6446384730633.5917986),
    (-3.355938203746339, 1.4689609027213726, 0.012301412653613125288),
    (5.780164245117244, 1.648879655927686e-05, 82.836334117369286069),
    (-2.3395753057236135, 15.13771901821681, 2.5247621604296087576e-11),
    (-3.0, 0.0003618780595574614, 7030015221.5762333157),
    (1.3554486794485336, 143.42348483485074, 3.0172410289647423654e-62),
    (-3.4167414774846723, 4.820912713900338, 4.2390865524064917884e-6),
    (2.224247748886645, 1.2900051117903545e-05, 1.1166275530115793231),
    (-3.3346690242941435, 0.0006289730348831267, 14192527950.864175281),
    (1.5443404033798638, 0.00019817567031965257, 0.88846633095761893481),
    (-2.0, 155.7952679905015, 5.6634330165511918641e-75),
    (10.509800868188531, 7.087748679858735e-05, 1159154.5095820520552),
    (5.360998541576781, 20.400357535195965, 0.00089050320695116204917),
    (0.33657089413832697, 0.0003452904894494879, 2.4489366772697126288),
    (-3.4372148590316467, 2.0294908103492233e-05, 3920123180969300.8547),
    (-5.048669078304753, 4.371542805994262, 7.4492861294342959592e-7),
];

const HYP: &[(f64, f64, f64, f64, f64)] = &[
    (-0.36178973393975555, 1.6382102660602444, 0.7183717543140178, 0.6142160724646543, 0.19552532929916872112),
    (-0.10361116814556492, 3.1485312388890963, 4.044920070743531, 0.2485388432581488, 0.97782678907380691324),
    (-1.3116198474385463, 0.8552630627376979, 5.478015266372153, 0.5892063130027322, 0.88270160684003160493),
    (1.58835229361528, 2.81426284583874, 4.215751820175158, -18.741911794368157, 0.021463606358999730402),
    (-1.8250420711278377, 0.28961271129953503, 5.787284615297007, 0.6207812572105467, 0.94609410083957206425),
    (0.6914967962155467, 2.6914967962155467, 5.596646262750133, 0.7252709563292725, 1.3865327429124949387),
    (3.0405991897222293, 3.110084777051854, 7.150683966774084, -0.6940316809454734, 0.47264097717452584541),
    (0.17427265567396466, 1.320413740696254, 0.5656093851078039, -21.82310538221318, 0.43025950922219737038),
    (-0.14605648145337424, 4.465607126852081, 5.888812501627953, -10.94897065122241, 1.3813286895786077639),
    (1.3341916034223393, 4.625578098652374, 3.0063195130840756, 0.5157646699249134, 5.0045395903919785367),
    (1.635199390250584, 3.635199390250584, 4.463838491388108, 0.5353735630434204, 2.6707696900234143371),
    (-0.10945664874810213, 0.3178781942349654, 1.2084215454868632, -0.805683324561268, 1.0194973978207650616),
    (-0.2130783717928506, 3.457215181135121, 5.434764854183159, -0.37427028703422094, 1.0462641945843272386),
    (1.223248739499311, 3.1623066786311544, 2.4793011058964245, 0.5376949535504338, 3.4875446902436595879),
    (-1.7487277727082806, 1.3602960356397924, 2.6726038273482042, 0.40137722792146513, 0.67817717210762530493),
    (0.36339621996167626, 2.3633962199616763, 0.777558666889173, -0.9553152548868025, 0.5332397438692732022),
    (-2.3551106862989024, 4.791239260299801, 3.436128574000899, -7.3815617798224515, 277.48387157252655937),
    (-0.10831622066563273, 0.8017798499976931, 3.78702108230199, 0.1306569342209576, 0.99693524968615027707),
    (0.7390217728631567, 1.2832701578893289, 2.6071158654661817, -22.732620188916716, 0.20419644201583776119),
    (3.2217479675429335, 1.983651546209525, 3.623710970197464, -20.821881509669993, 0.0032305887736583678836),
];

#[test]
fn gamma_reference_points() {
    assert!(rel(gamma_fn(4.3).unwrap(), 8.855_343_360_454_037) < 1e-13);
    assert!(rel(upper_gamma(-0.5, 1.0).unwrap(), 0.178_147_711_781_560_69) < 1e-12);
    assert!(rel(regularized_2f1(1.4, 2.2, 3.1, -2.5).unwrap(), 0.119_631_871_784_137_28) < 1e-11);
    assert!(rel(digamma(4.2).unwrap(), 1.311_338_891_286_599_6) < 1e-13);
    assert!((erf(0.20888569) - 0.232_318_522_580_904_27).abs() < 1e-12);
}

#[test]
fn gamma_poles_are_domain_errors() {
    assert!(gamma_fn(0.0).is_err());
    assert!(gamma_fn(-3.0).is_err());
    assert!(lower_gamma(0.0, 1.0).is_err());
    assert!(lower_gamma(-1.2, 1.0).is_err());
    assert!(upper_gamma(-1.0, 0.0).is_err());
}

#[test]
fn upper_gamma_table() {
    for &(a, x, want) in UPPER {
        let v = upper_gamma(a, x).unwrap();
        assert!(rel(v, want) < 2e-11, "Γ({a}, {x}) = {v}, want {want}");
    }
}

#[test]
fn hypergeometric_table() {
    for &(a, b, c, z, want) in HYP {
        let v = gauss_2f1(a, b, c, z).unwrap();
        assert!(rel(v, want) < 1e-9, "2F1({a},{b};{c};{z}) = {v}, want {want}");
    }
}

#[test]
fn regularized_at_nonpositive_c_is_finite() {
    // limit c → -1 from both sides
    let v = regularized_2f1(1.5, 2.0, -1.0, 0.3).unwrap();
    let lo = regularized_2f1(1.5, 2.0, -1.0 - 1e-7, 0.3).unwrap();
    let hi = regularized_2f1(1.5, 2.0, -1.0 + 1e-7, 0.3).unwrap();
    assert!(v.is_finite() && rel(0.5 * (lo + hi), v) < 1e-5);
}

#[test]
fn delta_params_layout() {
    assert_eq!(delta_params(3, 1.0).unwrap(), vec![1.0 / 3.0, 2.0 / 3.0, 1.0]);
    assert!(delta_params(0, 1.0).is_err());
}

#[test]
fn meijer_moment_shaped_calls() {
    for (i, &(a1, a2, mu2, phi, mu1, n, z, want)) in G_TABLE.iter().enumerate() {
        let s = moment_shaped(a1, a2, mu2, phi, mu1, n);
        let v = meijer_g(&s, z).unwrap();
        assert!(rel(v.value, want) < 1e-8, "case {i}: {} vs {want}", v.value);
    }
}

#[test]
fn meijer_fixed_moment_call() {
    // (α1, α2, μ2) = (2, 2, 1), n = 1, φ = 8.2368, μ1 = 4
    let s = moment_shaped(2, 2, 1.0, 8.2368, 4.0, 1.0);
    let v = meijer_g(&s, 0.37).unwrap();
    assert!(rel(v.value, 0.277_180_779_385_627_245) < 1e-10, "{}", v.value);
    let v = meijer_g(&s, 2.5).unwrap();
    assert!(rel(v.value, 0.033_742_903_848_967_350_6) < 1e-10, "{}", v.value);
}

#[test]
fn meijer_lower_gamma_identity() {
    // G^{1,1}_{1,2}(z | 1; a, 0) = γ(a, z)
    for &(a, z) in &[(0.5, 0.3), (2.5, 4.0), (4.0, 12.0), (1.3, 0.01)] {
        let s = MeijerSpec::new(1, 1, vec![1.0], vec![a, 0.0]);
        let v = meijer_g(&s, z).unwrap().value;
        assert!(rel(v, lower_gamma(a, z).unwrap()) < 1e-10);
    }
}

#[test]
fn meijer_upper_gamma_identity() {
    // G^{2,0}_{1,2}(z | 1; 0, a) = Γ(a, z)
    for &(a, z) in &[(0.5, 0.3), (-1.5, 2.0), (3.0, 9.0)] {
        let s = MeijerSpec::new(2, 0, vec![1.0], vec![0.0, a]);
        let v = meijer_g(&s, z).unwrap().value;
        assert!(rel(v, upper_gamma(a, z).unwrap()) < 1e-10, "a={a}, z={z}: {v}");
    }
}

#[test]
fn meijer_contour_shift_and_refinement_agree() {
    let s = moment_shaped(2, 2, 1.0, 8.2368, 4.0, 1.0);
    let base = meijer_g(&s, 0.37).unwrap();
    let shifted = meijer_g_with(&s, 0.37, &MeijerOptions { shift: -0.02, ..Default::default() }).unwrap();
    let fine = meijer_g_with(&s, 0.37, &MeijerOptions { rel_tol: 1e-15, ..Default::default() }).unwrap();
    assert!((base.value - shifted.value).abs() <= base.abs_error + shifted.abs_error);
    assert!((base.value - fine.value).abs() <= base.abs_error.max(1e-14 * base.value.abs()));
}

#[test]
fn meijer_reports_divergent_contour() {
    // δ = 1 + 0 - (0 + 2)/2 = 0
    let s = MeijerSpec::new(1, 0, vec![], vec![0.0, 0.5]);
    assert!(matches!(meijer_g(&s, 1.0), Err(thzrelay::Error::Evaluation { .. })));
}

proptest! {
    #[test]
    fn incomplete_gamma_sum(a in 0.1f64..20.0, lx in -6.0f64..2.3) {
        let x = 10f64.powf(lx);
        let s = lower_gamma(a, x).unwrap() + upper_gamma(a, x).unwrap();
        let g = gamma_fn(a).unwrap();
        prop_assert!(rel(s, g) < 1e-12);
    }

    #[test]
    fn regularized_matches_plain(a in -2.0f64..3.0, b in 0.1f64..4.0, c in 0.2f64..5.0, z in -5.0f64..0.5) {
        let r = regularized_2f1(a, b, c, z).unwrap() * gamma_fn(c).unwrap();
        let f = gauss_2f1(a, b, c, z).unwrap();
        prop_assert!((r - f).abs() <= 1e-12 * f.abs().max(1.0));
    }

    #[test]
    fn upper_gamma_recurrence(a in -6.0f64..6.0, x in 0.05f64..30.0) {
        // Γ(a+1, x) = a Γ(a, x) + x^a e^{-x}
        let lhs = upper_gamma(a + 1.0, x).unwrap();
        let rhs = a * upper_gamma(a, x).unwrap() + x.powf(a) * (-x).exp();
        prop_assert!((lhs - rhs).abs() <= 1e-11 * lhs.abs().max(x.powf(a) * (-x).exp()));
    }

    #[test]
    fn erf_odd_and_bounded(x in -6.0f64..6.0) {
        prop_assert!((erf(x) + erf(-x)).abs() < 1e-15);
        prop_assert!(erf(x).abs() <= 1.0);
    }
}

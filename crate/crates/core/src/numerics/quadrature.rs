//! Adaptive Gauss–Kronrod quadrature (21-point rule, globally adaptive
//! bisection of the worst interval).

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{domain, Error, Result};

/// Tolerances and the subdivision budget for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub relative_tolerance: f64,
    pub absolute_tolerance: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            relative_tolerance: 1e-8,
            absolute_tolerance: 1e-12,
            max_subdivisions: 200,
        }
    }
}

impl QuadratureSpec {
    pub fn new(
        relative_tolerance: f64,
        absolute_tolerance: f64,
        max_subdivisions: usize,
    ) -> Result<Self> {
        let spec = QuadratureSpec {
            relative_tolerance,
            absolute_tolerance,
            max_subdivisions,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.relative_tolerance > 0.0 && self.relative_tolerance.is_finite()) {
            return domain(format!(
                "relative tolerance must be > 0, got {}",
                self.relative_tolerance
            ));
        }
        if !(self.absolute_tolerance >= 0.0 && self.absolute_tolerance.is_finite()) {
            return domain(format!(
                "absolute tolerance must be >= 0, got {}",
                self.absolute_tolerance
            ));
        }
        if self.max_subdivisions == 0 {
            return domain("max_subdivisions must be >= 1");
        }
        Ok(())
    }

    pub fn with_relative_tolerance(mut self, rtol: f64) -> Self {
        self.relative_tolerance = rtol;
        self
    }

    pub fn with_absolute_tolerance(mut self, atol: f64) -> Self {
        self.absolute_tolerance = atol;
        self
    }

    pub fn with_max_subdivisions(mut self, n: usize) -> Self {
        self.max_subdivisions = n;
        self
    }
}

/// Integration interval. Infinite ends are handled by `t = a + u/(1-u)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Finite(f64, f64),
    /// `[a, ∞)`
    UpperHalf(f64),
    /// `(-∞, b]`
    LowerHalf(f64),
    /// `(-∞, ∞)`, split at zero.
    RealLine,
}

/// Result of a converged integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub subdivisions: usize,
}

/// Integrates `f` over `domain`, failing with [`Error::NonConvergence`] if the
/// tolerance cannot be met within `spec.max_subdivisions` intervals.
pub fn integrate<F>(f: F, domain: Domain, spec: &QuadratureSpec) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    integrate_with_error(f, domain, spec).map(|e| e.value)
}

pub fn integrate_with_error<F>(f: F, domain: Domain, spec: &QuadratureSpec) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    spec.validate()?;
    match domain {
        Domain::Finite(a, b) => {
            if !(a.is_finite() && b.is_finite()) {
                return crate::error::domain("finite domain needs finite limits");
            }
            if a == b {
                return Ok(Estimate {
                    value: 0.0,
                    error: 0.0,
                    subdivisions: 0,
                });
            }
            if a > b {
                let e = adaptive(&f, b, a, spec)?;
                return Ok(Estimate {
                    value: -e.value,
                    ..e
                });
            }
            adaptive(&f, a, b, spec)
        }
        Domain::UpperHalf(a) => {
            if !a.is_finite() {
                return crate::error::domain("half-infinite domain needs a finite start");
            }
            half_line(&f, a, 1.0, spec)
        }
        Domain::LowerHalf(b) => {
            if !b.is_finite() {
                return crate::error::domain("half-infinite domain needs a finite end");
            }
            half_line(&f, b, -1.0, spec)
        }
        Domain::RealLine => {
            let left = half_line(&f, 0.0, -1.0, spec)?;
            let right = half_line(&f, 0.0, 1.0, spec)?;
            Ok(Estimate {
                value: left.value + right.value,
                error: left.error + right.error,
                subdivisions: left.subdivisions + right.subdivisions,
            })
        }
    }
}

/// `∫ f` from `origin` to infinity in direction `sign`, via `t = u/(1−u)`.
fn half_line<F>(f: &F, origin: f64, sign: f64, spec: &QuadratureSpec) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    let g = |u: f64| {
        let v = 1.0 - u;
        f(origin + sign * u / v) / (v * v)
    };
    adaptive(&g, 0.0, 1.0, spec)
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn adaptive<F>(f: &F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    let first = gauss_kronrod21(f, a, b)?;
    let mut value = first.value;
    let mut error = first.error;
    let mut heap = BinaryHeap::with_capacity(spec.max_subdivisions + 1);
    heap.push(first);
    let mut subdivisions = 1;

    loop {
        let tolerance = spec
            .absolute_tolerance
            .max(spec.relative_tolerance * value.abs());
        if error <= tolerance {
            return Ok(Estimate {
                value,
                error,
                subdivisions,
            });
        }
        if subdivisions >= spec.max_subdivisions {
            break;
        }
        let worst = heap.pop().expect("heap holds at least one segment");
        let mid = 0.5 * (worst.a + worst.b);
        // Interval exhausted at machine precision.
        if mid <= worst.a || mid >= worst.b {
            heap.push(worst);
            break;
        }
        let left = gauss_kronrod21(f, worst.a, mid)?;
        let right = gauss_kronrod21(f, mid, worst.b)?;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        subdivisions += 1;
    }

    // Re-sum to shed the drift accumulated by incremental updates.
    let value: f64 = heap.iter().map(|s| s.value).sum();
    let error: f64 = heap.iter().map(|s| s.error).sum();
    let tolerance = spec
        .absolute_tolerance
        .max(spec.relative_tolerance * value.abs());
    if error <= tolerance {
        return Ok(Estimate {
            value,
            error,
            subdivisions,
        });
    }
    Err(Error::NonConvergence {
        estimate: value,
        error,
        subdivisions,
    })
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689,
    0.973_906_528_517_171_720_077_964_012_084,
    0.930_157_491_355_708_226_001_207_180_060,
    0.865_063_366_688_984_510_732_096_688_423,
    0.780_817_726_586_416_897_063_717_578_345,
    0.679_409_568_299_024_406_234_327_365_115,
    0.562_757_134_668_604_683_339_000_099_273,
    0.433_395_394_129_247_190_799_265_943_166,
    0.294_392_862_701_460_198_131_126_603_104,
    0.148_874_338_981_631_210_884_826_001_130,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062,
    0.032_558_162_307_964_727_478_818_972_459,
    0.054_755_896_574_351_996_031_381_300_245,
    0.075_039_674_810_919_952_767_043_140_916,
    0.093_125_454_583_697_605_535_065_465_083,
    0.109_387_158_802_297_641_899_210_590_326,
    0.123_491_976_262_065_851_077_746_691_229,
    0.134_709_217_311_473_325_928_054_001_772,
    0.142_775_938_577_060_080_797_094_273_139,
    0.147_739_104_901_338_491_374_841_515_972,
    0.149_445_554_002_916_905_664_936_468_390,
];

// Gauss weights for the nodes XGK[1], XGK[3], ..., XGK[9].
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893,
    0.149_451_349_150_580_593_145_776_339_658,
    0.219_086_362_515_982_043_995_534_934_228,
    0.269_266_719_309_996_355_091_226_921_569,
    0.295_524_224_714_752_870_173_892_994_651,
];

fn gauss_kronrod21<F>(f: &F, a: f64, b: f64) -> Result<Segment>
where
    F: Fn(f64) -> f64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let eval = |x: f64| -> Result<f64> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            domain(format!("integrand is not finite at x = {x:e} ({y})"))
        }
    };

    let fc = eval(center)?;
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    let mut abs_sum = kronrod.abs();
    let mut fv = [(0.0, 0.0); 10];
    for (j, &x) in XGK[..10].iter().enumerate() {
        let dx = half * x;
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        fv[j] = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * kronrod;
    let mut asc = WGK[10] * (fc - mean).abs();
    for (j, &(f1, f2)) in fv.iter().enumerate() {
        asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }

    let value = kronrod * half;
    let abs_sum = abs_sum * half.abs();
    let asc = asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if asc != 0.0 && error != 0.0 {
        error = asc * (200.0 * error / asc).powf(1.5).min(1.0);
    }
    if abs_sum > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * abs_sum);
    }
    Ok(Segment { a, b, value, error })
}

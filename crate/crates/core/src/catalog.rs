//! Integrands on `[-1, 1]`: a small catalog of analytic test functions plus
//! tabulated data loaded from CSV.
//!
//! Function specs use the grammar
//!
//! ```text
//! one | x | abs32 | exp | cosh | rational:<gamma> | pk:<k> | file:<path>[:linear|:cubic]
//! ```
//!
//! `rational:<gamma>` is `(1 + x) / (gamma² + x²)` and `pk:<k>` is the Legendre
//! polynomial `P_k`.

use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};

use crate::legendre::legendre_p_unchecked;
use crate::spline;
use crate::{Error, Result};

/// Anything that can be integrated against the Legendre and Abel kernels.
pub trait Integrand {
    /// `f(x)`. Callers guarantee `|x| <= 1`.
    fn value(&self, x: f64) -> f64;

    /// Interior points of `(-1, 1)` where `f` is not smooth, ascending.
    /// Quadratures split there.
    fn breakpoints(&self) -> Vec<f64> {
        Vec::new()
    }

    fn label(&self) -> String;
}

impl<T: Integrand + ?Sized> Integrand for &T {
    fn value(&self, x: f64) -> f64 {
        (**self).value(x)
    }
    fn breakpoints(&self) -> Vec<f64> {
        (**self).breakpoints()
    }
    fn label(&self) -> String {
        (**self).label()
    }
}

/// A closure wrapped as an [`Integrand`].
pub struct FnIntegrand<F> {
    f: F,
    label: String,
    breakpoints: Vec<f64>,
}

impl<F: Fn(f64) -> f64> FnIntegrand<F> {
    pub fn new(label: impl Into<String>, f: F) -> Self {
        Self {
            f,
            label: label.into(),
            breakpoints: Vec::new(),
        }
    }

    pub fn with_breakpoints(mut self, mut points: Vec<f64>) -> Self {
        points.retain(|p| p.abs() < 1.0);
        points.sort_by(f64::total_cmp);
        self.breakpoints = points;
        self
    }
}

impl<F: Fn(f64) -> f64> Integrand for FnIntegrand<F> {
    fn value(&self, x: f64) -> f64 {
        (self.f)(x)
    }
    fn breakpoints(&self) -> Vec<f64> {
        self.breakpoints.clone()
    }
    fn label(&self) -> String {
        self.label.clone()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Interpolation {
    Linear,
    #[default]
    Cubic,
}

impl Interpolation {
    fn as_str(self) -> &'static str {
        match self {
            Interpolation::Linear => "linear",
            Interpolation::Cubic => "cubic",
        }
    }
}

/// Tabulated `(x, f(x))` pairs covering exactly `[-1, 1]`.
///
/// Cubic interpolation is a not-a-knot spline (C², O(h⁴)); with fewer than
/// four points it degrades to linear.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    abscissas: Vec<f64>,
    values: Vec<f64>,
    interpolation: Interpolation,
    slopes: Vec<f64>,
    source: Option<PathBuf>,
}

impl SampledFunction {
    pub fn new(
        abscissas: Vec<f64>,
        values: Vec<f64>,
        interpolation: Interpolation,
    ) -> Result<Self> {
        if abscissas.len() != values.len() {
            return Err(Error::Validation(format!(
                "{} abscissas but {} values",
                abscissas.len(),
                values.len()
            )));
        }
        if abscissas.len() < 2 {
            return Err(Error::Validation(
                "sampled function needs at least two points".into(),
            ));
        }
        if let Some(i) = abscissas.iter().chain(&values).position(|v| !v.is_finite()) {
            return Err(Error::Validation(format!(
                "non-finite entry at position {i}"
            )));
        }
        if let Some(i) = abscissas.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::Validation(format!(
                "abscissas not strictly increasing at row {}: {} >= {}",
                i + 1,
                abscissas[i],
                abscissas[i + 1]
            )));
        }
        let (first, last) = (abscissas[0], abscissas[abscissas.len() - 1]);
        if first != -1.0 || last != 1.0 {
            return Err(Error::Validation(format!(
                "abscissas must span exactly [-1, 1], got [{first}, {last}]"
            )));
        }
        let slopes = if interpolation == Interpolation::Cubic && abscissas.len() >= 4 {
            spline::not_a_knot_slopes(&abscissas, &values)
        } else {
            Vec::new()
        };
        Ok(Self {
            abscissas,
            values,
            interpolation,
            slopes,
            source: None,
        })
    }

    /// Tabulates `f` on `points` uniform abscissas in `[-1, 1]`.
    pub fn tabulate(
        f: impl Fn(f64) -> f64,
        points: usize,
        interpolation: Interpolation,
    ) -> Result<Self> {
        if points < 2 {
            return Err(Error::Validation(
                "sampled function needs at least two points".into(),
            ));
        }
        let last = (points - 1) as f64;
        let xs: Vec<f64> = (0..points)
            .map(|i| {
                if i + 1 == points {
                    1.0
                } else {
                    -1.0 + 2.0 * i as f64 / last
                }
            })
            .collect();
        let ys = xs.iter().map(|&x| f(x)).collect();
        Self::new(xs, ys, interpolation)
    }

    /// Reads `x,f(x)` rows. A single non-numeric header row is skipped.
    pub fn from_csv_reader<R: Read>(reader: R, interpolation: Interpolation) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (row, record) in rdr.records().enumerate() {
            let record = record.map_err(|e| Error::Validation(format!("malformed CSV: {e}")))?;
            if record.len() != 2 {
                return Err(Error::Validation(format!(
                    "row {}: expected 2 fields `x,f`, found {}",
                    row + 1,
                    record.len()
                )));
            }
            let parsed = (record[0].parse::<f64>(), record[1].parse::<f64>());
            match parsed {
                (Ok(x), Ok(y)) => {
                    xs.push(x);
                    ys.push(y);
                }
                _ if row == 0 => continue,
                _ => {
                    return Err(Error::Validation(format!(
                        "row {}: cannot parse `{},{}` as numbers",
                        row + 1,
                        &record[0],
                        &record[1]
                    )))
                }
            }
        }
        Self::new(xs, ys, interpolation)
    }

    pub fn from_csv_path(path: &Path, interpolation: Interpolation) -> Result<Self> {
        let file = std::fs::File::open(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        let mut sampled = Self::from_csv_reader(std::io::BufReader::new(file), interpolation)?;
        sampled.source = Some(path.to_owned());
        Ok(sampled)
    }

    pub fn abscissas(&self) -> &[f64] {
        &self.abscissas
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn interpolation(&self) -> Interpolation {
        self.interpolation
    }

    pub fn source(&self) -> Option<&Path> {
        self.source.as_deref()
    }

    fn interpolate(&self, x: f64) -> f64 {
        let xs = &self.abscissas;
        let i = xs.partition_point(|&a| a <= x).clamp(1, xs.len() - 1) - 1;
        let (x0, x1) = (xs[i], xs[i + 1]);
        let (y0, y1) = (self.values[i], self.values[i + 1]);
        if self.slopes.is_empty() {
            let t = (x - x0) / (x1 - x0);
            y0 + t * (y1 - y0)
        } else {
            spline::hermite(x0, x1, y0, y1, self.slopes[i], self.slopes[i + 1], x)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FunctionKind {
    One,
    X,
    /// `|x|^{3/2}`
    Abs32,
    Exp,
    Cosh,
    /// `(1 + x) / (γ² + x²)`, `γ > 0`
    Rational {
        gamma: f64,
    },
    /// Legendre polynomial `P_k`
    Pk {
        k: usize,
    },
    Sampled(SampledFunction),
}

/// A validated integrand description with a human-readable label.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionSpec {
    kind: FunctionKind,
    label: String,
}

impl FunctionSpec {
    pub fn new(kind: FunctionKind) -> Result<Self> {
        if let FunctionKind::Rational { gamma } = kind {
            if !(gamma > 0.0 && gamma.is_finite()) {
                return Err(Error::Validation(format!(
                    "rational: gamma must be > 0, got {gamma}"
                )));
            }
        }
        let label = render_kind(&kind);
        Ok(Self { kind, label })
    }

    pub fn kind(&self) -> &FunctionKind {
        &self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `f(x)` for `|x| <= 1`.
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        if x.is_nan() || x.abs() > 1.0 {
            return Err(Error::Domain {
                what: "x",
                value: x,
                domain: "[-1, 1]",
            });
        }
        Ok(self.value(x))
    }

    /// Grammar text for this spec; the inverse of [`parse_spec`].
    pub fn render(&self) -> String {
        render_kind(&self.kind)
    }

    /// Whether `f(-x) = f(x)` holds analytically.
    pub fn is_even(&self) -> bool {
        match self.kind {
            FunctionKind::One | FunctionKind::Abs32 | FunctionKind::Cosh => true,
            FunctionKind::Pk { k } => k % 2 == 0,
            _ => false,
        }
    }
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn render_kind(kind: &FunctionKind) -> String {
    match kind {
        FunctionKind::One => "one".into(),
        FunctionKind::X => "x".into(),
        FunctionKind::Abs32 => "abs32".into(),
        FunctionKind::Exp => "exp".into(),
        FunctionKind::Cosh => "cosh".into(),
        FunctionKind::Rational { gamma } => format!("rational:{gamma}"),
        FunctionKind::Pk { k } => format!("pk:{k}"),
        FunctionKind::Sampled(s) => {
            let path = s
                .source()
                .map_or_else(|| "<memory>".into(), |p| p.display().to_string());
            format!("file:{path}:{}", s.interpolation().as_str())
        }
    }
}

impl Integrand for FunctionSpec {
    fn value(&self, x: f64) -> f64 {
        match &self.kind {
            FunctionKind::One => 1.0,
            FunctionKind::X => x,
            FunctionKind::Abs32 => {
                let a = x.abs();
                a * a.sqrt()
            }
            FunctionKind::Exp => x.exp(),
            FunctionKind::Cosh => x.cosh(),
            FunctionKind::Rational { gamma } => (1.0 + x) / (gamma * gamma + x * x),
            FunctionKind::Pk { k } => legendre_p_unchecked(*k, x),
            FunctionKind::Sampled(s) => s.interpolate(x),
        }
    }

    fn breakpoints(&self) -> Vec<f64> {
        match &self.kind {
            FunctionKind::Abs32 => vec![0.0],
            _ => Vec::new(),
        }
    }

    fn label(&self) -> String {
        self.label.clone()
    }
}

/// Parses the function grammar described in the module docs.
pub fn parse_spec(text: &str) -> Result<FunctionSpec> {
    let text = text.trim();
    let parse_err = |token: &str, reason: &str| Error::Parse {
        token: token.into(),
        reason: reason.into(),
    };
    let (head, arg) = match text.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (text, None),
    };
    let no_arg = |kind: FunctionKind| match arg {
        None => FunctionSpec::new(kind),
        Some(a) => Err(parse_err(a, "this function takes no argument")),
    };
    match head {
        "one" => no_arg(FunctionKind::One),
        "x" => no_arg(FunctionKind::X),
        "abs32" => no_arg(FunctionKind::Abs32),
        "exp" => no_arg(FunctionKind::Exp),
        "cosh" => no_arg(FunctionKind::Cosh),
        "rational" => {
            let a = arg.ok_or_else(|| parse_err(text, "expected rational:<gamma>"))?;
            let gamma = a
                .parse::<f64>()
                .map_err(|_| parse_err(a, "gamma is not a number"))?;
            FunctionSpec::new(FunctionKind::Rational { gamma })
        }
        "pk" => {
            let a = arg.ok_or_else(|| parse_err(text, "expected pk:<k>"))?;
            let k = a
                .parse::<usize>()
                .map_err(|_| parse_err(a, "k is not a nonnegative integer"))?;
            FunctionSpec::new(FunctionKind::Pk { k })
        }
        "file" => {
            let a = arg
                .filter(|a| !a.is_empty())
                .ok_or_else(|| parse_err(text, "expected file:<path>"))?;
            let (path, interpolation) = if let Some(p) = a.strip_suffix(":linear") {
                (p, Interpolation::Linear)
            } else if let Some(p) = a.strip_suffix(":cubic") {
                (p, Interpolation::Cubic)
            } else {
                (a, Interpolation::default())
            };
            let sampled = SampledFunction::from_csv_path(Path::new(path), interpolation)?;
            FunctionSpec::new(FunctionKind::Sampled(sampled))
        }
        other => Err(parse_err(other, "unknown function")),
    }
}

/// The analytic catalog used by the cross-validation suites.
pub fn catalog() -> Vec<FunctionSpec> {
    [
        "one",
        "x",
        "abs32",
        "exp",
        "cosh",
        "rational:1",
        "rational:0.5",
        "pk:3",
        "pk:8",
    ]
    .iter()
    .map(|s| parse_spec(s).expect("catalog entries parse"))
    .collect()
}

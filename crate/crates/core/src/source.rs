//! Textual function sources: `identity`, `koebe`, `ex31:n=K`, `ex32`,
//! `ex33:n=K,b=X,beta=Y`, `ex34:n=K` and `phi:c0,c1,...`.
//!
//! A `phi:` list gives the coefficients of `z/f` starting from the
//! constant term, which must be 1. Entries are real (`-0.5`, `1e-3`) or
//! complex (`2i`, `1+2i`, `-0.5-i`).

use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::families::{build, Family, FamilySpec, EX32_ORDER};
use crate::functionals::NormalizedFunction;
use crate::series::ComplexSeries;

#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSource {
    Identity,
    Koebe,
    Family(Family),
    Phi(Vec<Complex64>),
}

impl FunctionSource {
    /// Materializes the function. Polynomials are zero-padded to `order`;
    /// `ex32` uses at least its own default order.
    pub fn build(&self, order: usize) -> Result<NormalizedFunction> {
        match self {
            FunctionSource::Identity => Ok(NormalizedFunction::identity(order)),
            FunctionSource::Koebe => {
                let phi = ComplexSeries::from_real(&[1.0, -2.0, 1.0])?;
                let n = order.max(2);
                NormalizedFunction::labelled(phi.with_order(n), "koebe")
            }
            FunctionSource::Family(family) => {
                let order = match family {
                    Family::Ex32 => order.max(EX32_ORDER),
                    _ => order,
                };
                build(&FamilySpec::with_order(*family, order))
            }
            FunctionSource::Phi(coeffs) => {
                let phi = ComplexSeries::new(coeffs.clone())?;
                let n = order.max(phi.order());
                NormalizedFunction::labelled(phi.with_order(n), format_phi_label(coeffs))
            }
        }
    }
}

fn format_phi_label(coeffs: &[Complex64]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .map(|c| {
            if c.im == 0.0 {
                format!("{}", c.re)
            } else if c.re == 0.0 {
                format!("{}i", c.im)
            } else {
                format!("{}{:+}i", c.re, c.im)
            }
        })
        .collect();
    format!("phi:{}", parts.join(","))
}

impl FromStr for FunctionSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, args) = match s.split_once(':') {
            Some((h, a)) => (h.trim(), Some(a.trim())),
            None => (s, None),
        };
        match (head.to_ascii_lowercase().as_str(), args) {
            ("identity", None) => Ok(FunctionSource::Identity),
            ("koebe", None) => Ok(FunctionSource::Koebe),
            ("ex32", None) => Ok(FunctionSource::Family(Family::Ex32)),
            ("ex31", Some(a)) => {
                let kv = KeyValues::parse(a)?;
                kv.only(&["n"])?;
                Ok(FunctionSource::Family(Family::Ex31 { n: kv.get("n")? }))
            }
            ("ex34", Some(a)) => {
                let kv = KeyValues::parse(a)?;
                kv.only(&["n"])?;
                Ok(FunctionSource::Family(Family::Ex34 { n: kv.get("n")? }))
            }
            ("ex33", Some(a)) => {
                let kv = KeyValues::parse(a)?;
                kv.only(&["n", "b", "beta"])?;
                Ok(FunctionSource::Family(Family::Ex33 {
                    n: kv.get("n")?,
                    b: kv.get("b")?,
                    beta: kv.get("beta")?,
                }))
            }
            ("phi", Some(a)) => {
                let coeffs = a
                    .split(',')
                    .map(parse_complex)
                    .collect::<Result<Vec<_>>>()?;
                if coeffs.is_empty() {
                    return Err(Error::Parse("phi: needs at least the constant term".into()));
                }
                Ok(FunctionSource::Phi(coeffs))
            }
            _ => Err(Error::Parse(format!(
                "unknown function source `{s}` (expected identity, koebe, ex31:n=K, ex32, \
                 ex33:n=K,b=X,beta=Y, ex34:n=K or phi:c0,c1,...)"
            ))),
        }
    }
}

struct KeyValues<'a>(Vec<(&'a str, &'a str)>);

impl<'a> KeyValues<'a> {
    fn parse(s: &'a str) -> Result<Self> {
        s.split(',')
            .map(|item| {
                item.split_once('=')
                    .map(|(k, v)| (k.trim(), v.trim()))
                    .ok_or_else(|| Error::Parse(format!("expected key=value, got `{item}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(KeyValues)
    }

    fn only(&self, allowed: &[&str]) -> Result<()> {
        match self.0.iter().find(|(k, _)| !allowed.contains(k)) {
            Some((k, _)) => Err(Error::Parse(format!("unexpected parameter `{k}`"))),
            None => Ok(()),
        }
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<T> {
        let raw = self
            .0
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::Parse(format!("missing parameter `{key}`")))?;
        raw.parse()
            .map_err(|_| Error::Parse(format!("bad value `{raw}` for `{key}`")))
    }
}

/// Parses `a`, `bi`, `a+bi` or `a-bi`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad coefficient `{s}`"));
    let parse_f = |t: &str| t.parse::<f64>().map_err(|_| bad());
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(parse_f(s)?, 0.0));
    };
    // split at the last sign that is not the leading one or an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| (bytes[j] == b'+' || bytes[j] == b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(j) => (parse_f(&body[..j])?, &body[j..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => parse_f(t)?,
    };
    Ok(Complex64::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("1").unwrap(), c(1.0, 0.0));
        assert_eq!(parse_complex("-0.5").unwrap(), c(-0.5, 0.0));
        assert_eq!(parse_complex("2i").unwrap(), c(0.0, 2.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("1+2i").unwrap(), c(1.0, 2.0));
        assert_eq!(parse_complex("1-i").unwrap(), c(1.0, -1.0));
        assert_eq!(parse_complex("1e-3-2.5e-1i").unwrap(), c(1e-3, -0.25));
        assert_eq!(parse_complex("-1e+2i").unwrap(), c(0.0, -100.0));
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("1+xi").is_err());
    }

    #[test]
    fn sources() {
        assert_eq!("identity".parse::<FunctionSource>().unwrap(), FunctionSource::Identity);
        assert_eq!(
            "ex31:n=2".parse::<FunctionSource>().unwrap(),
            FunctionSource::Family(Family::Ex31 { n: 2 })
        );
        assert_eq!(
            "ex33:n=3,b=0.5,beta=0.3".parse::<FunctionSource>().unwrap(),
            FunctionSource::Family(Family::Ex33 { n: 3, b: 0.5, beta: 0.3 })
        );
        assert_eq!(
            "phi:1,0,2".parse::<FunctionSource>().unwrap(),
            FunctionSource::Phi(vec![c(1.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)])
        );
        for bad in ["ex31", "ex31:m=2", "ex31:n=x", "nope", "ex33:n=3,b=0.5", "phi:"] {
            assert!(bad.parse::<FunctionSource>().is_err(), "{bad}");
        }
    }

    #[test]
    fn build_pads_and_checks_normalization() {
        let f = "phi:1,0,2".parse::<FunctionSource>().unwrap().build(16).unwrap();
        assert_eq!(f.order(), 16);
        assert_eq!(f.label, "phi:1,0,2");
        let err = "phi:2,1".parse::<FunctionSource>().unwrap().build(4).unwrap_err();
        assert!(matches!(err, Error::NotNormalized { .. }));
        let f = FunctionSource::Koebe.build(8).unwrap();
        assert_eq!(f.b(1), c(-2.0, 0.0));
        let f = FunctionSource::Family(Family::Ex32).build(16).unwrap();
        assert_eq!(f.order(), EX32_ORDER);
    }
}

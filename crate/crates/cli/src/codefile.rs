//! The JSON code description format.
//!
//! Polynomials are ascending coefficient lists (`x^4 + x + 1` is
//! `[1, 1, 0, 0, 1]`). An element of `F_q` is a plain integer when `e = 1`
//! and a list of `e` residues otherwise; an element of `F_{q^m}` is the list
//! of its `m` coordinates in the basis `1, a, ..., a^{m-1}`.

use rankweight::codes::LinearCode;
use rankweight::gf::{BaseElement, BaseField, ExtElement, FieldSpec};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Prime(u32),
    Tower(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub p: u32,
    #[serde(default = "one")]
    pub e: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_modulus: Option<Vec<u32>>,
    pub m: usize,
    pub ext_modulus: Vec<Coeff>,
    pub n: usize,
    pub generator: Vec<Vec<Vec<Coeff>>>,
}

fn one() -> usize {
    1
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

pub fn base_field(p: u32, e: usize, base_modulus: Option<&[u32]>) -> Result<BaseField, CliError> {
    let base = match (e, base_modulus) {
        (0, _) => return Err(invalid("e must be positive")),
        (1, None) => BaseField::prime(p),
        (1, Some(_)) => return Err(invalid("base_modulus is only allowed when e > 1")),
        (_, None) => return Err(invalid(format!("base_modulus of degree {e} is required"))),
        (_, Some(f)) => {
            if f.len() != e + 1 {
                return Err(invalid(format!("base_modulus must have degree e = {e}")));
            }
            BaseField::new(p, Some(f.to_vec()))
        }
    };
    base.map_err(|err| invalid(format!("base field: {err}")))
}

pub fn parse_base(base: &BaseField, c: &Coeff) -> Result<BaseElement, CliError> {
    let coeffs = match (base.e(), c) {
        (1, Coeff::Prime(v)) => vec![*v],
        (1, Coeff::Tower(_)) => return Err(invalid("F_q coefficients must be integers when e = 1")),
        (_, Coeff::Tower(v)) => v.clone(),
        (e, Coeff::Prime(_)) => return Err(invalid(format!("F_q coefficients must be lists of {e} residues"))),
    };
    base.from_coeffs(coeffs).map_err(|err| invalid(err.to_string()))
}

pub fn format_base(c: &BaseElement) -> Coeff {
    match c.coeffs() {
        [v] => Coeff::Prime(*v),
        v => Coeff::Tower(v.to_vec()),
    }
}

pub fn field_spec(base: BaseField, ext_modulus: &[Coeff]) -> Result<FieldSpec, CliError> {
    let g = ext_modulus.iter().map(|c| parse_base(&base, c)).collect::<Result<Vec<_>, _>>()?;
    FieldSpec::new(base, g).map_err(|err| invalid(format!("extension field: {err}")))
}

pub fn parse_ext(spec: &FieldSpec, coords: &[Coeff]) -> Result<ExtElement, CliError> {
    if coords.len() != spec.m() {
        return Err(invalid(format!("elements need {} coordinates, got {}", spec.m(), coords.len())));
    }
    let coords = coords.iter().map(|c| parse_base(spec.base(), c)).collect::<Result<Vec<_>, _>>()?;
    spec.from_coords(coords).map_err(|err| invalid(err.to_string()))
}

pub fn format_ext(spec: &FieldSpec, c: &ExtElement) -> Vec<Coeff> {
    spec.expand(c).iter().map(format_base).collect()
}

impl CodeFile {
    pub fn spec(&self) -> Result<FieldSpec, CliError> {
        let base = base_field(self.p, self.e, self.base_modulus.as_deref())?;
        if self.ext_modulus.len() != self.m + 1 {
            return Err(invalid(format!("ext_modulus must have degree m = {}", self.m)));
        }
        field_spec(base, &self.ext_modulus)
    }

    pub fn to_code(&self) -> Result<LinearCode, CliError> {
        let spec = self.spec()?;
        let rows = self
            .generator
            .iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != self.n {
                    return Err(invalid(format!(
                        "generator row {i} has length {}, expected n = {}",
                        row.len(),
                        self.n
                    )));
                }
                row.iter().map(|x| parse_ext(&spec, x)).collect()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if rows.is_empty() {
            return Err(invalid("generator has no rows"));
        }
        LinearCode::from_rows(spec, rows).map_err(|err| invalid(format!("generator: {err}")))
    }

    /// The file for `c`, with its reduced generator.
    pub fn from_code(c: &LinearCode, name: Option<String>) -> Self {
        let spec = c.spec();
        let base = spec.base();
        CodeFile {
            name,
            p: spec.p(),
            e: spec.e(),
            base_modulus: base.modulus().map(<[u32]>::to_vec),
            m: spec.m(),
            ext_modulus: spec.ext_modulus().iter().map(format_base).collect(),
            n: c.n(),
            generator: c
                .generator()
                .row_vecs()
                .iter()
                .map(|row| row.iter().map(|x| format_ext(spec, x)).collect())
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|err| invalid(format!("code file: {err}")))
    }

    pub fn to_json(&self) -> String {
        crate::output::pretty(&serde_json::to_value(self).expect("code files serialize"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_file() -> CodeFile {
        CodeFile::from_json(
            r#"{"p": 2, "m": 4, "ext_modulus": [1, 1, 0, 0, 1], "n": 3,
                "generator": [[[0,1,1,0], [1,1,1,0], [1,0,0,0]]]}"#,
        )
        .unwrap()
    }

    #[test]
    fn parses_prime_base() {
        let c = cyclic_file().to_code().unwrap();
        assert_eq!((c.n(), c.k(), c.spec().q(), c.spec().m()), (3, 1, 2, 4));
    }

    #[test]
    fn round_trip() {
        let c = cyclic_file().to_code().unwrap();
        let file = CodeFile::from_code(&c, Some("x".into()));
        let again = CodeFile::from_json(&file.to_json()).unwrap();
        assert_eq!(again, file);
        assert_eq!(again.to_code().unwrap(), c);
    }

    #[test]
    fn tower_base() {
        // F_4 = F_2[x]/(x^2+x+1), F_16 = F_4[a]/(a^2 + a + x)
        let text = r#"{"p": 2, "e": 2, "base_modulus": [1, 1, 1], "m": 2,
            "ext_modulus": [[0,1], [1,0], [1,0]], "n": 2,
            "generator": [[[[1,0],[0,0]], [[0,0],[1,0]]]]}"#;
        let file = CodeFile::from_json(text).unwrap();
        let c = file.to_code().unwrap();
        assert_eq!(c.spec().q(), 4);
        assert_eq!(CodeFile::from_code(&c, None).to_code().unwrap(), c);
    }

    #[test]
    fn rejects_bad_input() {
        let mut f = cyclic_file();
        f.ext_modulus = vec![Coeff::Prime(1), Coeff::Prime(0), Coeff::Prime(1)];
        f.m = 2;
        // x^2 + 1 = (x+1)^2 over F_2
        assert!(matches!(f.spec(), Err(CliError::Invalid(m)) if m.contains("reducible")));
        let mut f = cyclic_file();
        f.generator[0].pop();
        assert!(f.to_code().is_err());
        let mut f = cyclic_file();
        f.generator[0][0] = vec![Coeff::Tower(vec![0, 1]); 4];
        assert!(f.to_code().is_err());
        assert!(CodeFile::from_json(r#"{"p": 4, "m": 1, "ext_modulus": [0, 1], "n": 1, "generator": [[[1]]]}"#)
            .unwrap()
            .to_code()
            .is_err());
    }
}

//! JSON files for schemes, cubics and reports.

use serde::{Deserialize, Serialize};

use crate::correspond::{threefold_vars, CubicThreefold};
use crate::exactalg::json::PolyJson;
use crate::exactalg::{parse_rational, rational_to_string};
use crate::singclass::{scheme_vars, TwoThreeScheme};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeFile {
    pub q: PolyJson,
    pub f: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubicFile {
    pub f: PolyJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marked: Option<Vec<String>>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { location: format!("line {} column {}", e.line(), e.column()), message: e.to_string() }
}

pub fn parse_scheme(src: &str) -> Result<TwoThreeScheme> {
    let file: SchemeFile = serde_json::from_str(src).map_err(json_error)?;
    let v = scheme_vars();
    TwoThreeScheme::new(file.q.to_poly(&v, "q")?, file.f.to_poly(&v, "f")?)
}

/// Canonical form: the stored representative of the scheme, pretty JSON
/// with a trailing newline.
pub fn emit_scheme(c: &TwoThreeScheme) -> String {
    let file = SchemeFile { q: PolyJson::from_poly(c.q()), f: PolyJson::from_poly(c.f()) };
    serde_json::to_string_pretty(&file).expect("serializable") + "\n"
}

pub fn parse_cubic(src: &str) -> Result<CubicThreefold> {
    let file: CubicFile = serde_json::from_str(src).map_err(json_error)?;
    let f = file.f.to_poly(&threefold_vars(), "f")?;
    let marked = match file.marked {
        None => None,
        Some(v) => Some(
            v.iter()
                .enumerate()
                .map(|(i, s)| {
                    parse_rational(s).ok_or_else(|| Error::Parse {
                        location: format!("marked[{i}]"),
                        message: format!("malformed rational '{s}'"),
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    CubicThreefold::new(f, marked)
}

pub fn emit_cubic(x: &CubicThreefold) -> String {
    let file = CubicFile {
        f: PolyJson::from_poly(x.f()),
        marked: x.marked().map(|p| p.iter().map(rational_to_string).collect()),
    };
    serde_json::to_string_pretty(&file).expect("serializable") + "\n"
}

pub fn emit_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

//! The JSON input document: structure equations `d e_k` and the forms
//! `F`, `Ψ±`, all with exact rational coefficients.
//!
//! ```json
//! {
//!   "name": "h3",
//!   "convention": "internal-F",
//!   "orientation": [1, 2, 3, 4, 5, 6],
//!   "d": { "e1": [], ..., "e6": [["1", [1, 2]], ["-1", [3, 4]]] },
//!   "F": [["-1", [1, 2]], ...],
//!   "psi_plus": [...],
//!   "psi_minus": [...]
//! }
//! ```

use std::collections::HashMap;
use std::fmt;

use serde_json::Value;

use crate::catalog::{CatalogEntry, Convention};
use crate::error::Error;
use crate::exterior::{Blade, Form, Orientation, DIM};
use crate::liealg::LieAlgebra6;
use crate::su3::SU3Structure;
use crate::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub field: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_empty() {
            write!(f, "line {}: {}", self.line, self.message)
        } else {
            write!(f, "line {}, field {}: {}", self.line, self.field, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub name: String,
    pub convention: Convention,
    pub orientation: Orientation,
    pub d: [Form; DIM],
    /// `F`, `Ψ⁺`, `Ψ⁻` as written, i.e. in `convention`.
    pub f: Form,
    pub psi_plus: Form,
    pub psi_minus: Form,
}

impl InputDocument {
    pub fn algebra(&self) -> Result<LieAlgebra6, Error> {
        LieAlgebra6::new(self.d.clone())
    }

    pub fn structure(&self) -> Result<SU3Structure, Error> {
        let sign = self.convention.form_sign();
        SU3Structure::new(
            self.f.scale(&sign),
            self.psi_plus.scale(&sign),
            self.psi_minus.scale(&sign),
            self.orientation,
        )
    }

    pub fn from_entry(entry: &CatalogEntry, convention: Convention) -> InputDocument {
        let sign = convention.form_sign();
        let s = &entry.structure;
        InputDocument {
            name: entry.name.clone(),
            convention,
            orientation: *s.orientation(),
            d: entry.algebra.d1forms().clone(),
            f: s.f().scale(&sign),
            psi_plus: s.psi_plus().scale(&sign),
            psi_minus: s.psi_minus().scale(&sign),
        }
    }

    /// Canonical text: sorted keys, one term per line.
    pub fn to_json(&self) -> String {
        let terms = |f: &Form, indent: &str| -> String {
            if f.is_zero() {
                return "[]".into();
            }
            let rows: Vec<String> = f
                .terms()
                .map(|(b, c)| {
                    let idx: Vec<String> = b.indices().map(|i| (i + 1).to_string()).collect();
                    format!("{indent}  [\"{c}\", [{}]]", idx.join(", "))
                })
                .collect();
            format!("[\n{}\n{indent}]", rows.join(",\n"))
        };
        let d_rows: Vec<String> = (0..DIM)
            .map(|k| format!("    \"e{}\": {}", k + 1, terms(&self.d[k], "    ")))
            .collect();
        let orientation: Vec<String> = self
            .orientation
            .volume_tuple()
            .iter()
            .map(|i| i.to_string())
            .collect();
        format!(
            "{{\n  \"F\": {},\n  \"convention\": \"{}\",\n  \"d\": {{\n{}\n  }},\n  \"name\": {},\n  \"orientation\": [{}],\n  \"psi_minus\": {},\n  \"psi_plus\": {}\n}}\n",
            terms(&self.f, "  "),
            self.convention.tag(),
            d_rows.join(",\n"),
            Value::String(self.name.clone()),
            orientation.join(", "),
            terms(&self.psi_minus, "  "),
            terms(&self.psi_plus, "  "),
        )
    }
}

/// Line of every value in a syntactically valid JSON text, keyed by path
/// (`d.e1[0][1]`).
fn value_lines(text: &str) -> HashMap<String, usize> {
    enum Frame {
        Object(Option<String>),
        Array(usize),
    }
    let mut out = HashMap::new();
    let mut stack: Vec<Frame> = Vec::new();
    let mut prefix: Vec<String> = Vec::new();
    let mut line = 1;
    let mut chars = text.chars().peekable();
    let mut expecting_key = false;
    let path = |prefix: &[String]| prefix.concat();
    let mut record = |stack: &mut Vec<Frame>, prefix: &mut Vec<String>, line: usize| {
        let seg = match stack.last_mut() {
            Some(Frame::Object(Some(k))) => format!(".{k}"),
            Some(Frame::Array(i)) => {
                let s = format!("[{i}]");
                *i += 1;
                s
            }
            _ => String::new(),
        };
        prefix.push(seg);
        out.insert(path(prefix).trim_start_matches('.').to_string(), line);
    };
    while let Some(c) = chars.next() {
        match c {
            '\n' => line += 1,
            '{' => {
                record(&mut stack, &mut prefix, line);
                stack.push(Frame::Object(None));
                expecting_key = true;
            }
            '[' => {
                record(&mut stack, &mut prefix, line);
                stack.push(Frame::Array(0));
            }
            '}' | ']' => {
                stack.pop();
                prefix.pop();
            }
            ',' => {
                if let Some(Frame::Object(_)) = stack.last() {
                    expecting_key = true;
                }
            }
            '"' => {
                let mut s = String::new();
                while let Some(ch) = chars.next() {
                    match ch {
                        '\\' => {
                            chars.next();
                        }
                        '"' => break,
                        _ => s.push(ch),
                    }
                }
                if expecting_key {
                    if let Some(Frame::Object(k)) = stack.last_mut() {
                        *k = Some(s);
                    }
                    expecting_key = false;
                } else {
                    record(&mut stack, &mut prefix, line);
                    prefix.pop();
                }
            }
            c if c == '-' || c.is_ascii_alphanumeric() => {
                while chars
                    .peek()
                    .is_some_and(|n| n.is_ascii_alphanumeric() || matches!(n, '.' | '+' | '-'))
                {
                    chars.next();
                }
                record(&mut stack, &mut prefix, line);
                prefix.pop();
            }
            _ => {}
        }
    }
    out
}

struct Ctx<'a> {
    lines: &'a HashMap<String, usize>,
}

impl Ctx<'_> {
    fn err(&self, path: &str, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.lines.get(path).copied().unwrap_or(1),
            field: path.to_string(),
            message: message.into(),
        }
    }

    fn scalar(&self, v: &Value, path: &str) -> Result<Scalar, ParseError> {
        match v {
            Value::String(s) => s.parse::<Scalar>().map_err(|e| self.err(path, e.to_string())),
            Value::Number(n) if n.is_i64() || n.is_u64() => n
                .to_string()
                .parse::<Scalar>()
                .map_err(|e| self.err(path, e.to_string())),
            Value::Number(n) => Err(self.err(path, format!("floating point not accepted: {n}"))),
            _ => Err(self.err(path, "coefficient must be a rational string")),
        }
    }

    fn index_tuple(&self, v: &Value, path: &str, degree: usize) -> Result<Blade, ParseError> {
        let items = v
            .as_array()
            .ok_or_else(|| self.err(path, "index tuple must be an array"))?;
        if items.len() != degree {
            return Err(self.err(
                path,
                format!("expected {degree} indices, got {}", items.len()),
            ));
        }
        let mut idx = Vec::with_capacity(degree);
        for (n, item) in items.iter().enumerate() {
            let p = format!("{path}[{n}]");
            let i = item
                .as_u64()
                .ok_or_else(|| self.err(&p, format!("index must be an integer in 1..6, got {item}")))?;
            if !(1..=DIM as u64).contains(&i) {
                return Err(self.err(&p, format!("index {i} out of range 1..6")));
            }
            idx.push(i as usize);
        }
        for w in idx.windows(2) {
            if w[0] == w[1] {
                return Err(self.err(path, format!("repeated index {}", w[0])));
            }
            if w[0] > w[1] {
                return Err(self.err(path, "indices must be strictly increasing"));
            }
        }
        Ok(Blade::of(&idx))
    }

    fn form(&self, v: &Value, path: &str, degree: usize) -> Result<Form, ParseError> {
        let terms = v
            .as_array()
            .ok_or_else(|| self.err(path, "expected a list of [coefficient, [indices]] terms"))?;
        let mut out = Form::zero(degree);
        for (n, term) in terms.iter().enumerate() {
            let p = format!("{path}[{n}]");
            let pair = term
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| self.err(&p, "term must be [coefficient, [indices]]"))?;
            let c = self.scalar(&pair[0], &format!("{p}[0]"))?;
            let b = self.index_tuple(&pair[1], &format!("{p}[1]"), degree)?;
            if !out.coeff(b).is_zero() {
                return Err(self.err(&p, "index tuple listed twice"));
            }
            out.add_term(b, c);
        }
        Ok(out)
    }
}

const FIELDS: [&str; 7] = ["F", "convention", "d", "name", "orientation", "psi_minus", "psi_plus"];

pub fn parse(text: &str) -> Result<InputDocument, ParseError> {
    let root: Value = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        field: String::new(),
        message: format!("invalid JSON: {e}"),
    })?;
    let lines = value_lines(text);
    let cx = Ctx { lines: &lines };
    let obj = root
        .as_object()
        .ok_or_else(|| cx.err("", "document must be a JSON object"))?;
    if let Some(k) = obj.keys().find(|k| !FIELDS.contains(&k.as_str())) {
        return Err(cx.err(k, format!("unknown field {k:?}")));
    }
    let get = |k: &str| obj.get(k).ok_or_else(|| cx.err("", format!("missing field {k:?}")));

    let name = get("name")?
        .as_str()
        .ok_or_else(|| cx.err("name", "name must be a string"))?
        .to_string();
    let convention = match obj.get("convention") {
        None => Convention::InternalF,
        Some(Value::String(tag)) => Convention::from_tag(tag)
            .ok_or_else(|| cx.err("convention", format!("unknown convention tag {tag:?}")))?,
        Some(_) => return Err(cx.err("convention", "convention must be a string")),
    };
    let orientation = match obj.get("orientation") {
        None => Orientation::default(),
        Some(v) => {
            let items = v
                .as_array()
                .filter(|a| a.len() == DIM)
                .ok_or_else(|| cx.err("orientation", "orientation must list 6 indices"))?;
            let mut tuple = [0usize; DIM];
            for (n, item) in items.iter().enumerate() {
                tuple[n] = item.as_u64().unwrap_or(0) as usize;
            }
            Orientation::from_tuple(tuple).map_err(|e| cx.err("orientation", e.to_string()))?
        }
    };
    let d_obj = get("d")?
        .as_object()
        .ok_or_else(|| cx.err("d", "d must map e1..e6 to 2-forms"))?;
    if let Some(k) = d_obj
        .keys()
        .find(|k| !(1..=DIM).any(|i| k.as_str() == format!("e{i}")))
    {
        return Err(cx.err(&format!("d.{k}"), format!("unknown generator {k:?}")));
    }
    let mut d: [Form; DIM] = std::array::from_fn(|_| Form::zero(2));
    for (k, slot) in d.iter_mut().enumerate() {
        let key = format!("e{}", k + 1);
        if let Some(v) = d_obj.get(&key) {
            *slot = cx.form(v, &format!("d.{key}"), 2)?;
        }
    }
    Ok(InputDocument {
        name,
        convention,
        orientation,
        d,
        f: cx.form(get("F")?, "F", 2)?,
        psi_plus: cx.form(get("psi_plus")?, "psi_plus", 3)?,
        psi_minus: cx.form(get("psi_minus")?, "psi_minus", 3)?,
    })
}

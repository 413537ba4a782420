//! Report tree with two renderings: canonical JSON (sorted keys, rationals
//! as strings, forms as sorted term lists) and indented text.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::analysis::{compare_expected, present, Analysis, ExpectedCheck, TorsionAnalysis};
use crate::catalog::{CatalogEntry, Convention};
use crate::connection::IdentityReport;
use crate::exterior::{Form, Tensor};
use crate::instanton::TheoremReport;
use crate::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Map(BTreeMap<String, Node>),
    List(Vec<Node>),
    Bool(bool),
    Count(usize),
    Text(String),
    Scalar(Scalar),
    Form(Form),
    /// Nonzero entries only.
    Tensor(Tensor),
}

impl Node {
    pub fn map() -> Node {
        Node::Map(BTreeMap::new())
    }

    pub fn with(mut self, key: &str, value: impl Into<Node>) -> Node {
        if let Node::Map(m) = &mut self {
            m.insert(key.to_string(), value.into());
        }
        self
    }

    pub fn to_json(&self) -> Value {
        match self {
            Node::Map(m) => Value::Object(m.iter().map(|(k, v)| (k.clone(), v.to_json())).collect()),
            Node::List(items) => Value::Array(items.iter().map(Node::to_json).collect()),
            Node::Bool(b) => Value::Bool(*b),
            Node::Count(n) => json!(n),
            Node::Text(s) => Value::String(s.clone()),
            Node::Scalar(x) => Value::String(x.to_string()),
            Node::Form(f) => Value::Array(
                f.terms()
                    .map(|(b, c)| {
                        let idx: Vec<usize> = b.indices().map(|i| i + 1).collect();
                        json!([c.to_string(), idx])
                    })
                    .collect(),
            ),
            Node::Tensor(t) => Value::Array(
                t.entries()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(idx, c)| {
                        let idx: Vec<usize> = idx.iter().map(|i| i + 1).collect();
                        json!([idx, c.to_string()])
                    })
                    .collect(),
            ),
        }
    }

    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(0, &mut out);
        out
    }

    fn write_text(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match self {
            Node::Map(m) => {
                for (k, v) in m {
                    match v {
                        Node::Map(_) | Node::List(_) if !v.is_inline() => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            v.write_text(depth + 1, out);
                        }
                        _ => out.push_str(&format!("{pad}{k}: {}\n", v.inline())),
                    }
                }
            }
            Node::List(items) => {
                for v in items {
                    if v.is_inline() {
                        out.push_str(&format!("{pad}- {}\n", v.inline()));
                    } else {
                        out.push_str(&format!("{pad}-\n"));
                        v.write_text(depth + 1, out);
                    }
                }
            }
            _ => out.push_str(&format!("{pad}{}\n", self.inline())),
        }
    }

    fn is_inline(&self) -> bool {
        match self {
            Node::Map(m) => m.is_empty(),
            Node::List(items) => items.is_empty(),
            _ => true,
        }
    }

    fn inline(&self) -> String {
        match self {
            Node::Map(_) => "{}".into(),
            Node::List(_) => "[]".into(),
            Node::Bool(b) => b.to_string(),
            Node::Count(n) => n.to_string(),
            Node::Text(s) => s.clone(),
            Node::Scalar(x) => x.to_string(),
            Node::Form(f) => f.render(),
            Node::Tensor(t) => {
                let terms: Vec<String> = t
                    .entries()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(idx, c)| {
                        let idx: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
                        format!("({}) {c}", idx.join(","))
                    })
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join(", ")
                }
            }
        }
    }
}

impl From<bool> for Node {
    fn from(b: bool) -> Node {
        Node::Bool(b)
    }
}

impl From<usize> for Node {
    fn from(n: usize) -> Node {
        Node::Count(n)
    }
}

impl From<&str> for Node {
    fn from(s: &str) -> Node {
        Node::Text(s.to_string())
    }
}

impl From<String> for Node {
    fn from(s: String) -> Node {
        Node::Text(s)
    }
}

impl From<Scalar> for Node {
    fn from(x: Scalar) -> Node {
        Node::Scalar(x)
    }
}

impl From<Form> for Node {
    fn from(f: Form) -> Node {
        Node::Form(f)
    }
}

impl From<Tensor> for Node {
    fn from(t: Tensor) -> Node {
        Node::Tensor(t)
    }
}

fn checks(list: &[(&'static str, bool)]) -> Node {
    Node::Map(list.iter().map(|(k, v)| (k.to_string(), Node::Bool(*v))).collect())
}

fn not_applicable(reason: &str) -> Node {
    Node::map().with("applicable", false).with("reason", reason)
}

fn theorem(t: &TheoremReport) -> Node {
    Node::map()
        .with("applicable", t.applicable)
        .with("hypotheses", checks(&t.hypotheses))
        .with("lhs", t.lhs)
        .with("rhs", t.rhs)
        .with("holds", t.holds())
}

fn identities(r: &IdentityReport) -> Node {
    let mut m = BTreeMap::new();
    for c in &r.checks {
        let node = match &c.first_failure {
            None => Node::Bool(c.passed),
            Some(idx) => Node::map().with("passed", c.passed).with(
                "first_failure",
                Node::List(idx.iter().map(|i| Node::Count(i + 1)).collect()),
            ),
        };
        m.insert(c.name.to_string(), node);
    }
    let [a, b, c] = r.pair_symmetry;
    Node::Map(m).with(
        "pair symmetry",
        Node::map()
            .with("nabla T is a 4-form", a)
            .with("R pair symmetric", b)
            .with("dT = 4 nabla^g T", c),
    )
}

/// `F`, `Ψ±`, `dF`, `dΨ±` under their names in `conv`.
fn structure_section(a: &Analysis, conv: Convention) -> Node {
    let s = &a.structure;
    let (f, pp, pm) = match conv {
        Convention::InternalF => ("F", "psi_plus", "psi_minus"),
        Convention::PaperOmega => ("omega", "Theta_plus", "Theta_minus"),
    };
    let orientation: Vec<Node> = s.orientation().volume_tuple().iter().map(|&i| Node::Count(i)).collect();
    Node::map()
        .with("convention", conv.tag())
        .with(f, present(s.f(), conv))
        .with(pp, present(s.psi_plus(), conv))
        .with(pm, present(s.psi_minus(), conv))
        .with(&format!("d{f}"), present(&a.df, conv))
        .with(&format!("d{pp}"), present(&a.dpsi_plus, conv))
        .with(&format!("d{pm}"), present(&a.dpsi_minus, conv))
        .with("Phi", s.phi().clone())
        .with("orientation", Node::List(orientation))
        .with("validation", checks(&a.su3_checks))
}

fn algebra_section(a: &Analysis) -> Node {
    let mut d = Node::map();
    for (k, f) in a.algebra.d1forms().iter().enumerate() {
        d = d.with(&format!("e{}", k + 1), f.clone());
    }
    Node::map()
        .with("d", d)
        .with("jacobi", true)
        .with("unimodular", a.unimodular)
}

fn torsion_section(ta: &TorsionAnalysis) -> Node {
    let cur = &ta.curvature;
    let ricci = Node::map().with("tensor", cur.ric.clone()).with(
        "einstein_constant",
        match &ta.einstein {
            Some(c) => Node::Scalar(c.clone()),
            None => Node::Text("not Einstein".into()),
        },
    );
    let acyt = &ta.acyt;
    let ins = &ta.instanton;
    let mut node = Node::map()
        .with("T", ta.t.clone())
        .with("dT", ta.dt.clone())
        .with("sigma_T", ta.sigma.clone())
        .with("d_nabla_T", ta.d_nabla_t.clone())
        .with("theta", ta.theta.clone())
        .with("lambda", ta.lambda.clone())
        .with("mu", ta.mu.clone())
        .with("connection", ta.gamma.clone())
        .with("Ric", ricci)
        .with(
            "rho",
            cur.rho.clone().map(Node::Form).unwrap_or_else(|| Node::Text("n/a".into())),
        )
        .with("Scal", cur.scal.clone())
        .with("Scal_g", cur.scal_g.clone())
        .with(
            "acyt",
            Node::map()
                .with("is_acyt", acyt.is_acyt())
                .with("rho_zero", acyt.rho_zero)
                .with("cycon_plus", acyt.cycon_plus_ok)
                .with("cycon_minus", acyt.cycon_minus_ok)
                .with("nabla_psi_zero", acyt.nabla_psi_zero)
                .with("torsion_formula", acyt.torcy_ok),
        )
        .with(
            "instanton",
            Node::map()
                .with("instanton", ins.first_pair_su3)
                .with("curvature_in_su3", ins.last_pair_su3)
                .with("nabla_T_zero", ins.nabla_t_zero)
                .with("nabla_N_zero", ins.nabla_n_zero)
                .with("nabla_theta_zero", ins.nabla_theta_zero)
                .with("dT_zero", ins.dt_zero)
                .with("hull_instanton", ins.hull_instanton)
                .with("pair_symmetric", ins.pair_symmetric),
        )
        .with(
            "holonomy",
            Node::map()
                .with("dim", ins.holonomy_dim)
                .with("stabilized", ins.holonomy_stabilized),
        )
        .with("identities", identities(&ta.identities))
        .with(
            "theorems",
            Node::map()
                .with("instanton iff parallel torsion", theorem(&ta.main_theorem))
                .with(
                    "instanton iff parallel torsion (compact)",
                    theorem(&ta.main_theorem_compact),
                )
                .with("Hull instanton iff dT = 0", theorem(&ta.hull_theorem)),
        );
    node = node.with(
        "codifferential",
        match &ta.delta {
            Some(d) => checks(&d.checks),
            None => not_applicable("not ACYT"),
        },
    );
    node = node.with(
        "acyt_consequences",
        match &ta.consequences {
            Some(c) => checks(c),
            None => not_applicable("not ACYT"),
        },
    );
    node.with(
        "chern",
        match &ta.chern {
            Some(c) => Node::map()
                .with("C_norm_sq", c.c_norm_sq.clone())
                .with("T_norm_sq", c.t_norm_sq.clone())
                .with("norm_identity", c.norm_identity_ok)
                .with("trace_lhs", c.trace_lhs.clone())
                .with("trace_rhs", c.trace_rhs.clone())
                .with("trace_identity", c.trace_identity_ok)
                .with("torsion_is_C", c.chern_torsion_is_c)
                .with("chern_instanton", c.chern_instanton),
            None => not_applicable("not Hermitian"),
        },
    )
}

fn class_section(a: &Analysis) -> Node {
    let c = &a.class;
    Node::map()
        .with("is_G1", c.is_g1)
        .with("hermitian", c.is_hermitian)
        .with("balanced", c.is_balanced)
        .with("nearly_kahler", c.is_nearly_kahler)
        .with("kahler", c.is_kahler)
        .with("balanced_G1", c.is_balanced_g1)
}

fn nijenhuis_section(a: &Analysis) -> Node {
    let n = &a.nijenhuis;
    let node = Node::map().with("skew", n.is_skew).with("zero", n.is_zero());
    match n.form() {
        Some(f) => node.with("N", f),
        None => node.with("tensor", n.tensor.clone()),
    }
}

pub fn analysis_report(name: &str, a: &Analysis, conv: Convention) -> Node {
    Node::map()
        .with("name", name)
        .with("algebra", algebra_section(a))
        .with("structure", structure_section(a, conv))
        .with("class", class_section(a))
        .with("nijenhuis", nijenhuis_section(a))
        .with(
            "torsion_connection",
            match &a.torsion {
                Some(ta) => torsion_section(ta).with("applicable", true),
                None => not_applicable("not G1: Nijenhuis tensor is not a 3-form"),
            },
        )
        .with(
            "status",
            match a.predicate_status() {
                0 => "G1, ACYT",
                _ if a.torsion.is_none() => "not G1",
                _ => "G1, not ACYT",
            },
        )
}

/// Theorem suite only.
pub fn verify_report(name: &str, a: &Analysis) -> Node {
    let base = Node::map()
        .with("name", name)
        .with("class", class_section(a))
        .with("unimodular", a.unimodular);
    let Some(ta) = &a.torsion else {
        return base.with("theorems", not_applicable("not G1: Nijenhuis tensor is not a 3-form"));
    };
    let failures = a.consistency_failures();
    base.with("acyt", ta.acyt.is_acyt())
        .with(
            "acyt_routes",
            Node::map()
                .with("rho_zero", ta.acyt.rho_zero)
                .with("cycon", ta.acyt.cycon_plus_ok && ta.acyt.cycon_minus_ok)
                .with("nabla_psi_zero", ta.acyt.nabla_psi_zero),
        )
        .with(
            "theorems",
            Node::map()
                .with("instanton iff parallel torsion", theorem(&ta.main_theorem))
                .with(
                    "instanton iff parallel torsion (compact)",
                    theorem(&ta.main_theorem_compact),
                )
                .with("Hull instanton iff dT = 0", theorem(&ta.hull_theorem)),
        )
        .with("identities", identities(&ta.identities))
        .with(
            "codifferential",
            match &ta.delta {
                Some(d) => checks(&d.checks),
                None => not_applicable("not ACYT"),
            },
        )
        .with(
            "acyt_consequences",
            match &ta.consequences {
                Some(c) => checks(c),
                None => not_applicable("not ACYT"),
            },
        )
        .with(
            "failures",
            Node::List(failures.into_iter().map(Node::Text).collect()),
        )
}

fn expected_rows(rows: &[ExpectedCheck]) -> Node {
    Node::Map(
        rows.iter()
            .map(|r| {
                (
                    r.key.to_string(),
                    Node::map()
                        .with("expected", r.expected.clone())
                        .with("computed", r.computed.clone())
                        .with("matches", r.passed),
                )
            })
            .collect(),
    )
}

pub fn catalog_report(entry: &CatalogEntry, a: &Analysis, conv: Convention) -> Node {
    let rows = compare_expected(entry, a);
    let params = Node::Map(
        entry
            .params
            .iter()
            .map(|(k, v)| (k.clone(), Node::Scalar(v.clone())))
            .collect(),
    );
    analysis_report(&entry.name, a, conv).with(
        "catalog",
        Node::map()
            .with("params", params)
            .with("expected_convention", entry.convention.tag())
            .with("expected", expected_rows(&rows))
            .with("all_expected_match", rows.iter().all(|r| r.passed)),
    )
}

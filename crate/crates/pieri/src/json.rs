//! JSON shapes for everything the CLI emits or reads.
//!
//! Rationals and symmetric polynomials are carried as strings (`"5/2"`,
//! `"s(3,1) - s(2,2)"`) so that nothing passes through floating point.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use pieri_core::betti::{BettiTable, EquivariantBettiTable, EquivariantDecomposition, NumericDecomposition, Outcome};
use pieri_core::classical::{BottResult, SheafPieriTerms};
use pieri_core::linalg::Q;
use pieri_core::minimize::MinimizeReport;
use pieri_core::olver::LinearMap;
use pieri_core::resolution::{EquivariantComplex, EulerReport, Provenance, Term};
use pieri_core::symfunc::{parse_sympoly, SymPoly};
use pieri_core::{Error, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    #[serde(rename = "homDegree")]
    pub hom: usize,
    #[serde(rename = "internalDegree")]
    pub degree: u32,
    pub partition: Vec<u32>,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
    /// `minimal` or `possibly_nonminimal`.
    pub provenance: String,
}

impl From<&EquivariantComplex> for ComplexJson {
    fn from(c: &EquivariantComplex) -> Self {
        ComplexJson {
            n: c.n,
            provenance: match c.provenance {
                Provenance::Minimal => "minimal".into(),
                Provenance::PossiblyNonminimal => "possibly_nonminimal".into(),
            },
            terms: c
                .terms
                .iter()
                .map(|t| TermJson {
                    hom: t.hom,
                    degree: t.degree,
                    partition: t.partition.padded(c.n),
                    multiplicity: t.multiplicity,
                })
                .collect(),
        }
    }
}

impl ComplexJson {
    pub fn to_complex(&self) -> Result<EquivariantComplex, Error> {
        let prov = match self.provenance.as_str() {
            "minimal" => Provenance::Minimal,
            "possibly_nonminimal" => Provenance::PossiblyNonminimal,
            other => return Err(Error::Parse(format!("unknown provenance `{other}`"))),
        };
        let mut c = EquivariantComplex::new(self.n, prov);
        for t in &self.terms {
            c.terms.push(Term {
                hom: t.hom,
                degree: t.degree,
                partition: Partition::new(&t.partition)?,
                multiplicity: t.multiplicity,
            });
        }
        c.sort();
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CancellationJson {
    pub hom: usize,
    pub degree: u32,
    pub partition: Vec<u32>,
    pub count: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerJson {
    pub degree_bound: u32,
    pub positive: bool,
    pub finite_length: bool,
    pub matches_cokernel: bool,
    /// `ch(M_d)` for `d = 0..=degree_bound`.
    pub hilbert: Vec<String>,
}

impl EulerJson {
    pub fn new(r: &EulerReport, bound: u32, matches: bool) -> Self {
        EulerJson {
            degree_bound: bound,
            positive: r.positive,
            finite_length: r.finite_length,
            matches_cokernel: matches,
            hilbert: r.quotient.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolveJson {
    pub n: usize,
    pub alpha: Vec<u32>,
    pub relations: Vec<Vec<u32>>,
    pub complex: ComplexJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimized: Option<MinimizedJson>,
    pub betti: TableJson,
    pub euler: EulerJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimizedJson {
    pub complete: bool,
    pub cancellations: Vec<CancellationJson>,
    pub complex: ComplexJson,
    pub betti: TableJson,
}

impl MinimizedJson {
    pub fn new(r: &MinimizeReport) -> Self {
        MinimizedJson {
            complete: r.complete,
            cancellations: r
                .cancellations
                .iter()
                .map(|c| CancellationJson {
                    hom: c.hom,
                    degree: c.degree,
                    partition: c.partition.padded(r.complex.n),
                    count: c.count,
                })
                .collect(),
            complex: ComplexJson::from(&r.complex),
            betti: TableJson::from_numeric(&EquivariantBettiTable::from_complex(&r.complex).to_numeric()),
        }
    }
}

/// A table entry: exactly one of `value` (a rational) or `schur` is present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub i: usize,
    pub j: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<Number>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schur: Option<String>,
}

/// Integers may be written bare; fractions must be strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    pub fn to_q(&self) -> Result<Q, Error> {
        match self {
            Number::Int(v) => Ok(Q::from_integer((*v).into())),
            Number::Text(s) => s.trim().parse().map_err(|_| Error::Parse(format!("bad rational `{s}`"))),
        }
    }

    pub fn from_q(q: &Q) -> Self {
        Number::Text(q.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codim: Option<usize>,
    /// Number of variables, needed for `schur` entries.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub entries: Vec<EntryJson>,
}

pub enum AnyTable {
    Numeric(BettiTable),
    Equivariant(EquivariantBettiTable),
}

impl TableJson {
    pub fn from_numeric(t: &BettiTable) -> Self {
        TableJson {
            codim: Some(t.codim()),
            n: None,
            entries: t
                .entries()
                .iter()
                .map(|(&(i, j), v)| EntryJson { i, j, value: Some(Number::from_q(v)), schur: None })
                .collect(),
        }
    }

    pub fn from_equivariant(t: &EquivariantBettiTable) -> Self {
        TableJson {
            codim: Some(t.codim()),
            n: Some(t.n),
            entries: t
                .entries()
                .iter()
                .map(|(&(i, j), v)| EntryJson { i, j, value: None, schur: Some(v.to_string()) })
                .collect(),
        }
    }

    pub fn is_equivariant(&self) -> bool {
        self.entries.iter().any(|e| e.schur.is_some())
    }

    /// Parses the table; `n` overrides the file's variable count.
    pub fn parse(&self, n: Option<usize>) -> Result<AnyTable, Error> {
        let mixed = self.entries.iter().any(|e| e.schur.is_some() == e.value.is_some());
        if mixed {
            return Err(Error::Parse("each entry needs exactly one of `value` or `schur`".into()));
        }
        if !self.is_equivariant() {
            let mut t = BettiTable::new();
            for e in &self.entries {
                t.add_to(e.i, e.j, &e.value.as_ref().expect("checked").to_q()?);
            }
            return Ok(AnyTable::Numeric(t));
        }
        let n = n
            .or(self.n)
            .ok_or_else(|| Error::Parse("equivariant tables need the number of variables `n`".into()))?;
        let mut t = EquivariantBettiTable::new(n);
        for e in &self.entries {
            t.add_to(e.i, e.j, &parse_sympoly(e.schur.as_ref().expect("checked"), n)?);
        }
        Ok(AnyTable::Equivariant(t))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericStepJson {
    pub coefficient: String,
    pub degrees: Vec<u32>,
    pub pure: TableJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericDecompositionJson {
    pub success: bool,
    pub steps: Vec<NumericStepJson>,
    pub residual: TableJson,
}

impl From<&NumericDecomposition> for NumericDecompositionJson {
    fn from(d: &NumericDecomposition) -> Self {
        NumericDecompositionJson {
            success: d.is_success(),
            steps: d
                .steps
                .iter()
                .map(|s| NumericStepJson {
                    coefficient: s.coefficient.to_string(),
                    degrees: s.degrees.clone(),
                    pure: TableJson::from_numeric(&s.pure),
                })
                .collect(),
            residual: TableJson::from_numeric(&d.residual),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantStepJson {
    pub numerator: String,
    pub denominator: String,
    pub degrees: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OutcomeJson {
    Success,
    NotPositive { hom: usize, degree: u32, weight: Vec<u32> },
    Unknown { hom: usize, degree: u32 },
    Stuck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantDecompositionJson {
    pub outcome: OutcomeJson,
    pub steps: Vec<EquivariantStepJson>,
    /// The input equals `sum steps + residual / residual_denominator`.
    pub residual: TableJson,
    pub residual_denominator: String,
}

impl From<&EquivariantDecomposition> for EquivariantDecompositionJson {
    fn from(d: &EquivariantDecomposition) -> Self {
        let n = d.residual.n;
        let outcome = match &d.outcome {
            Outcome::Success => OutcomeJson::Success,
            Outcome::NotPositive { hom, degree, weight } => {
                OutcomeJson::NotPositive { hom: *hom, degree: *degree, weight: weight.padded(n) }
            }
            Outcome::Unknown { hom, degree } => OutcomeJson::Unknown { hom: *hom, degree: *degree },
            Outcome::Stuck => OutcomeJson::Stuck,
        };
        EquivariantDecompositionJson {
            outcome,
            steps: d
                .steps
                .iter()
                .map(|s| EquivariantStepJson {
                    numerator: s.coefficient.num.to_string(),
                    denominator: s.coefficient.den.to_string(),
                    degrees: s.degrees.clone(),
                })
                .collect(),
            residual: TableJson::from_equivariant(&d.residual),
            residual_denominator: d.residual_den.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodomainJson {
    pub word: Vec<u32>,
    pub tableau: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OlverJson {
    pub n: usize,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub order: Vec<usize>,
    pub exterior: bool,
    pub rank: usize,
    pub domain: Vec<Vec<Vec<u32>>>,
    pub codomain: Vec<CodomainJson>,
    /// `(row, column, value)`: codomain index, domain index, rational.
    pub entries: Vec<(usize, usize, String)>,
}

impl OlverJson {
    pub fn new(m: &LinearMap, n: usize, alpha: &Partition, beta: &Partition, order: &[usize], exterior: bool) -> Self {
        OlverJson {
            n,
            alpha: alpha.padded(n),
            beta: beta.padded(n),
            order: order.to_vec(),
            exterior,
            rank: m.rank(),
            domain: m.domain.clone(),
            codomain: m
                .codomain
                .iter()
                .map(|(w, t)| CodomainJson { word: w.clone(), tableau: t.clone() })
                .collect(),
            entries: m.matrix.triples().into_iter().map(|(r, c, v)| (r, c, v.to_string())).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BottJson {
    Zero { zero: bool },
    Nonzero { degree: usize, weight: Vec<i64>, dual: bool },
}

impl From<&BottResult> for BottJson {
    fn from(b: &BottResult) -> Self {
        match b {
            BottResult::Zero => BottJson::Zero { zero: true },
            BottResult::Nonzero { degree, weight, dualized } => {
                BottJson::Nonzero { degree: *degree, weight: weight.clone(), dual: *dualized }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalTermJson {
    pub hom: usize,
    pub degree: u32,
    pub weight: Vec<i64>,
    pub grade: usize,
    pub source: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalTermsJson {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub minimal: bool,
    pub gl_nonminimal: bool,
    pub linear_differentials: Vec<(Vec<u32>, Vec<u32>)>,
    pub terms: Vec<ClassicalTermJson>,
}

impl From<&SheafPieriTerms> for ClassicalTermsJson {
    fn from(s: &SheafPieriTerms) -> Self {
        let n = s.group.rank;
        ClassicalTermsJson {
            family: s.group.family.to_string(),
            rank: n,
            minimal: s.minimal,
            gl_nonminimal: s.gl_nonminimal,
            linear_differentials: s
                .linear_differentials
                .iter()
                .map(|(a, b)| (a.padded(n), b.padded(n)))
                .collect(),
            terms: s
                .terms
                .iter()
                .map(|t| ClassicalTermJson {
                    hom: t.hom,
                    degree: t.degree,
                    weight: t.weight.clone(),
                    grade: t.grade,
                    source: t.source.padded(n),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckJson>,
}

/// Symmetric polynomials keyed by padded partitions, for compact comparisons.
pub fn poly_map(p: &SymPoly) -> BTreeMap<Vec<u32>, String> {
    p.terms().iter().map(|(l, c)| (l.padded(p.n()), c.to_string())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use pieri_core::betti::{bs_decompose_numeric, hk_pure_table};
    use pieri_core::resolution::mapping_cone_resolution;

    fn p(v: &[u32]) -> Partition {
        Partition::from_slice(v)
    }

    fn round_trip<T: Serialize + for<'a> Deserialize<'a> + PartialEq + std::fmt::Debug>(x: &T) {
        let s = serde_json::to_string_pretty(x).unwrap();
        let y: T = serde_json::from_str(&s).unwrap();
        assert_eq!(&y, x, "{s}");
    }

    #[test]
    fn complex_round_trip() {
        let c = mapping_cone_resolution(&p(&[4, 2, 1]), &[p(&[5, 3, 1]), p(&[5, 2, 2])], 4).unwrap();
        let j = ComplexJson::from(&c);
        round_trip(&j);
        assert_eq!(j.to_complex().unwrap(), c);
    }

    #[test]
    fn tables_round_trip() {
        let t = hk_pure_table(&[0, 1, 2, 4]).unwrap().scale(&Q::new(5.into(), 2.into()));
        let j = TableJson::from_numeric(&t);
        round_trip(&j);
        let AnyTable::Numeric(back) = j.parse(None).unwrap() else { panic!() };
        assert_eq!(back, t);

        let c = mapping_cone_resolution(&p(&[2, 1]), &[p(&[3, 1]), p(&[2, 2])], 3).unwrap();
        let e = EquivariantBettiTable::from_complex(&c);
        let j = TableJson::from_equivariant(&e);
        round_trip(&j);
        let AnyTable::Equivariant(back) = j.parse(None).unwrap() else { panic!() };
        assert_eq!(back, e);
    }

    #[test]
    fn decomposition_round_trip() {
        let t = BettiTable::from_ints(&[(0, 0, 8), (1, 1, 21), (2, 2, 15), (2, 3, 1), (3, 4, 3)]);
        round_trip(&NumericDecompositionJson::from(&bs_decompose_numeric(&t)));
    }

    #[test]
    fn bare_integers_and_strings_parse() {
        let j: TableJson = serde_json::from_str(r#"{"entries":[{"i":0,"j":0,"value":3},{"i":1,"j":2,"value":"5/2"}]}"#).unwrap();
        let AnyTable::Numeric(t) = j.parse(None).unwrap() else { panic!() };
        assert_eq!(t.get(1, 2), Q::new(5.into(), 2.into()));
        let bad: TableJson = serde_json::from_str(r#"{"entries":[{"i":0,"j":0,"value":1,"schur":"s(1)"}]}"#).unwrap();
        assert!(bad.parse(Some(2)).is_err());
    }

    #[test]
    fn bott_round_trip() {
        round_trip(&BottJson::from(&BottResult::Zero));
        round_trip(&BottJson::from(&BottResult::Nonzero { degree: 1, weight: vec![1, 0], dualized: false }));
    }
}

//! Requests, responses and their execution. The same types back single-shot
//! commands and batch records.

use std::collections::BTreeMap;
use std::fmt::Display;

use kronecker_core::{
    brauer_dim, kronecker, lr_coefficient, lr_product, stable_kronecker, standardize_traced,
    verify_induced_dim, BrauerLabel, CharacterOracle, Decomposition, Family, GroupContext, ModificationError,
    OracleLimits, Partition, WeightLabel,
};
use kronecker_core::modification::split_labels;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Malformed input of any kind; maps to exit code 1.
#[derive(Debug, Error)]
#[error("{0}")]
pub struct InputError(pub String);

impl InputError {
    fn from_display(e: impl Display) -> Self {
        Self(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Op {
    Lr,
    Stable,
    Decompose,
    Modify,
    Dim,
    BrauerDim,
    #[serde(alias = "verify-eq11")]
    VerifyInduced,
    VerifyCharacters,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub shape: Vec<i64>,
    pub mult: i64,
}

/// One operation with its operands. Unknown JSON fields are ignored, so the
/// output of `decompose --json` parses as a request carrying its own terms.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Request {
    pub op: Op,
    #[serde(default)]
    pub inputs: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub stable: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub trace: bool,
    /// Claimed decomposition: checked by `verify-characters`, compared with
    /// the computed terms by every other op.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<Term>>,
}

impl Request {
    pub fn new(op: Op) -> Self {
        Self {
            op,
            inputs: Vec::new(),
            family: None,
            n: None,
            level: None,
            stable: false,
            trace: false,
            terms: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Response {
    pub op: Op,
    pub inputs: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<Term>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub difference: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// A mathematical mismatch; maps to exit code 2.
    Fail,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub response: Response,
    pub text: String,
    pub verdict: Verdict,
}

/// Parses a label such as `[3,2,1]`, `3^2,1` or, for `SO(2l)` weights,
/// `[3,-2]`.
pub fn parse_label(s: &str) -> Result<Vec<i64>, InputError> {
    if let Ok(p) = s.parse::<Partition>() {
        return Ok(to_entries(&p));
    }
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    body.split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| InputError(format!("cannot parse label {s:?}")))
}

fn to_entries(p: &Partition) -> Vec<i64> {
    p.rows().iter().map(|&r| r as i64).collect()
}

fn to_partition(entries: &[i64]) -> Result<Partition, InputError> {
    let rows = entries
        .iter()
        .map(|&e| usize::try_from(e).map_err(|_| InputError(format!("{entries:?} has a negative entry"))))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(rows).map_err(InputError::from_display)
}

fn terms_of<K: Ord>(d: &Decomposition<K>, entries: impl Fn(&K) -> Vec<i64>) -> Vec<Term> {
    d.iter()
        .map(|(k, mult)| Term {
            shape: entries(k),
            mult,
        })
        .collect()
}

/// Terms as a multiset, merging repeated shapes and dropping zeros.
fn normalized(terms: &[Term]) -> BTreeMap<Vec<i64>, i64> {
    let mut out = BTreeMap::new();
    for t in terms {
        let mut shape = t.shape.clone();
        while shape.last() == Some(&0) {
            shape.pop();
        }
        *out.entry(shape).or_insert(0) += t.mult;
    }
    out.retain(|_, m| *m != 0);
    out
}

pub fn same_terms(a: &[Term], b: &[Term]) -> bool {
    normalized(a) == normalized(b)
}

pub struct Executor {
    oracle: CharacterOracle,
}

impl Executor {
    pub fn new(limits: OracleLimits) -> Self {
        Self {
            oracle: CharacterOracle::new(limits),
        }
    }

    pub fn execute(&self, req: &Request) -> Result<Outcome, InputError> {
        let mut response = Response {
            op: req.op,
            inputs: req.inputs.clone(),
            family: None,
            n: None,
            level: None,
            terms: None,
            value: None,
            certified: None,
            difference: None,
            note: None,
            trace: Vec::new(),
        };
        let (text, verdict) = match req.op {
            Op::Lr => self.lr(req, &mut response)?,
            Op::Stable => {
                let [a, b] = self.partitions::<2>(req)?;
                let d = stable_kronecker(&a, &b);
                response.terms = Some(terms_of(&d, to_entries));
                (format!("{a} x {b} = {d}"), Verdict::Pass)
            }
            Op::Decompose => self.decompose(req, &mut response)?,
            Op::Modify => self.modify(req, &mut response)?,
            Op::Dim => self.dim(req, &mut response)?,
            Op::BrauerDim => {
                let [lambda] = self.partitions::<1>(req)?;
                let level = req.level.ok_or_else(|| InputError("brauer-dim needs a level".into()))?;
                let label = BrauerLabel::new(lambda, level).map_err(InputError::from_display)?;
                let dim = brauer_dim(&label);
                response.level = Some(level);
                response.value = Some(dim.to_string());
                (format!("dim {label} = {dim}"), Verdict::Pass)
            }
            Op::VerifyInduced => {
                let [a, b] = self.partitions::<2>(req)?;
                let r = verify_induced_dim(&a, &b);
                let integral = r.is_integral();
                response.level = Some(r.level);
                response.value = Some(r.h.to_string());
                response.certified = Some(integral);
                let text = format!("h = {}, integral: {}", r.h, if integral { "yes" } else { "no" });
                (text, if integral { Verdict::Pass } else { Verdict::Fail })
            }
            Op::VerifyCharacters => self.verify_characters(req, &mut response)?,
        };
        let mut verdict = verdict;
        if req.op != Op::VerifyCharacters {
            if let (Some(claimed), Some(got)) = (&req.terms, &response.terms) {
                if !same_terms(claimed, got) {
                    verdict = Verdict::Fail;
                    response.note = Some("computed terms differ from the expected terms".into());
                }
            }
        }
        Ok(Outcome {
            response,
            text,
            verdict,
        })
    }

    fn partitions<const K: usize>(&self, req: &Request) -> Result<[Partition; K], InputError> {
        if req.inputs.len() != K {
            return Err(InputError(format!(
                "{:?} takes {K} label(s), got {}",
                req.op,
                req.inputs.len()
            )));
        }
        let parsed = req.inputs.iter().map(|e| to_partition(e)).collect::<Result<Vec<_>, _>>()?;
        Ok(parsed.try_into().expect("length checked"))
    }

    fn context(&self, req: &Request, response: &mut Response) -> Result<GroupContext, InputError> {
        let family: Family = req
            .family
            .as_deref()
            .ok_or_else(|| InputError("a group family (--family O|SO|Sp) is required".into()))?
            .parse()
            .map_err(InputError::from_display)?;
        let n = req.n.ok_or_else(|| InputError("a group dimension (--n) is required".into()))?;
        let ctx = GroupContext::new(family, n).map_err(InputError::from_display)?;
        response.family = Some(family.to_string());
        response.n = Some(n);
        Ok(ctx)
    }

    fn lr(&self, req: &Request, response: &mut Response) -> Result<(String, Verdict), InputError> {
        if req.inputs.len() == 3 {
            let [a, b, nu] = self.partitions::<3>(req)?;
            let c = lr_coefficient(&a, &b, &nu);
            response.value = Some(c.to_string());
            return Ok((format!("c({a},{b};{nu}) = {c}"), Verdict::Pass));
        }
        let [a, b] = self.partitions::<2>(req)?;
        let d = lr_product(&a, &b);
        response.terms = Some(terms_of(&d, to_entries));
        Ok((format!("{a} x {b} = {d}"), Verdict::Pass))
    }

    fn decompose(&self, req: &Request, response: &mut Response) -> Result<(String, Verdict), InputError> {
        let [a, b] = self.partitions::<2>(req)?;
        let ctx = self.context(req, response)?;
        let stable = stable_kronecker(&a, &b);
        if req.stable {
            response.terms = Some(terms_of(&stable, to_entries));
            response.note = Some("stable product before modification".into());
            return Ok((format!("stable: {a} x {b} = {stable}"), Verdict::Pass));
        }
        if req.trace {
            response.trace.push(format!("stable: {stable}"));
            for (shape, mult) in stable.iter() {
                if !ctx.is_standard(shape) {
                    let (label, steps) = standardize_traced(shape, &ctx);
                    response.trace.push(format!("{shape} (multiplicity {mult}) -> {label}"));
                    response.trace.extend(steps.iter().map(|s| format!("  {s}")));
                }
            }
        }
        let (product, negative) = match kronecker(&a, &b, &ctx) {
            Ok(d) => (d, false),
            Err(ModificationError::NegativeMultiplicity { decomposition, .. }) => (decomposition, true),
            Err(e) => return Err(InputError::from_display(e)),
        };
        let (terms, rendered) = if ctx.is_even_orthogonal() && ctx.family() == Family::SO {
            let d = split_labels(&product, &ctx);
            (terms_of(&d, |k| k.rows().to_vec()), d.to_string())
        } else {
            (terms_of(&product, to_entries), product.to_string())
        };
        response.terms = Some(terms.clone());
        let mut verdict = self.certify(&a, &b, &ctx, &terms, response)?;
        if negative {
            verdict = Verdict::Fail;
            response.note = Some("negative multiplicity after modification".into());
        }
        let mut text = String::new();
        for line in &response.trace {
            text.push_str(line);
            text.push('\n');
        }
        text.push_str(&format!("{ctx}: {a} x {b} = {rendered}\n"));
        text.push_str(&certification_line(response));
        Ok((text, verdict))
    }

    /// Character check of `terms`. Outside the oracle caps the answer is
    /// reported as uncertified rather than as a failure.
    fn certify(
        &self,
        a: &Partition,
        b: &Partition,
        ctx: &GroupContext,
        terms: &[Term],
        response: &mut Response,
    ) -> Result<Verdict, InputError> {
        let limits = self.oracle.limits();
        if !self.oracle.supports(ctx) || a.size() > limits.max_boxes || b.size() > limits.max_boxes {
            response.certified = Some(false);
            response.note = Some(format!(
                "outside the oracle caps (rank <= {}, boxes <= {})",
                limits.max_rank, limits.max_boxes
            ));
            return Ok(Verdict::Pass);
        }
        let report = if ctx.is_even_orthogonal() && ctx.family() == Family::SO {
            let claim: Decomposition<WeightLabel> =
                terms.iter().map(|t| (WeightLabel::new(t.shape.clone()), t.mult)).collect();
            self.oracle.verify_weight_product(a, b, ctx, &claim)
        } else {
            let claim = terms
                .iter()
                .map(|t| Ok((to_partition(&t.shape)?, t.mult)))
                .collect::<Result<Decomposition, InputError>>()?;
            self.oracle.verify_product(a, b, ctx, &claim)
        }
        .map_err(InputError::from_display)?;
        response.certified = Some(report.holds);
        if report.holds {
            Ok(Verdict::Pass)
        } else {
            response.difference = Some(report.difference.to_string());
            response.note = Some(format!("dimensions {} (product) vs {} (claim)", report.lhs_dim, report.rhs_dim));
            Ok(Verdict::Fail)
        }
    }

    fn modify(&self, req: &Request, response: &mut Response) -> Result<(String, Verdict), InputError> {
        let [lambda] = self.partitions::<1>(req)?;
        let ctx = self.context(req, response)?;
        let (label, steps) = standardize_traced(&lambda, &ctx);
        response.terms = Some(if label.is_zero() {
            Vec::new()
        } else {
            vec![Term {
                shape: to_entries(&label.shape),
                mult: i64::from(label.sign),
            }]
        });
        let mut text = String::new();
        if req.trace {
            response.trace = steps.iter().map(ToString::to_string).collect();
            for line in &response.trace {
                text.push_str(line);
                text.push('\n');
            }
        }
        text.push_str(&label.to_string());
        Ok((text, Verdict::Pass))
    }

    fn dim(&self, req: &Request, response: &mut Response) -> Result<(String, Verdict), InputError> {
        if req.inputs.len() != 1 {
            return Err(InputError(format!("dim takes 1 label, got {}", req.inputs.len())));
        }
        let ctx = self.context(req, response)?;
        let label = WeightLabel::new(req.inputs[0].clone());
        // the dimension formula is cheap at any rank
        let unbounded = CharacterOracle::new(OracleLimits {
            max_rank: usize::MAX,
            max_boxes: usize::MAX,
        });
        let dim = unbounded.group_dim(&label, &ctx).map_err(InputError::from_display)?;
        response.value = Some(dim.to_string());
        Ok((format!("dim {label} over {ctx} = {dim}"), Verdict::Pass))
    }

    fn verify_characters(&self, req: &Request, response: &mut Response) -> Result<(String, Verdict), InputError> {
        let [a, b] = self.partitions::<2>(req)?;
        let ctx = self.context(req, response)?;
        let terms = match &req.terms {
            Some(t) => t.clone(),
            None => {
                let computed = Request {
                    op: Op::Decompose,
                    trace: false,
                    stable: false,
                    terms: None,
                    ..req.clone()
                };
                self.execute(&computed)?.response.terms.unwrap_or_default()
            }
        };
        response.terms = Some(terms.clone());
        let verdict = self.certify(&a, &b, &ctx, &terms, response)?;
        if response.certified == Some(false) && verdict == Verdict::Pass {
            return Err(InputError(response.note.clone().unwrap_or_default()));
        }
        let mut text = format!("{ctx}: {a} x {b}\n{}", certification_line(response));
        if let Some(diff) = &response.difference {
            text.push_str(&format!("\ndifference: {diff}"));
        }
        Ok((text, verdict))
    }
}

fn certification_line(response: &Response) -> String {
    match (response.certified, &response.note) {
        (Some(true), _) => "certified: yes".to_string(),
        (_, Some(note)) => format!("certified: no ({note})"),
        _ => "certified: no".to_string(),
    }
}


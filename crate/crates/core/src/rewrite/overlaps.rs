use serde::Serialize;

use super::hopf::CocommutativeHopf;
use super::presentation::{NormalElement, Presentation};
use super::word::{Letter, MixedWord};
use crate::error::Result;
use crate::report::{witness, Check, Report};

/// One overlap word reduced in both possible ways.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ambiguity {
    pub word: Vec<String>,
    pub resolvable: bool,
    /// Normal form after first reducing the leading pair.
    pub left: String,
    /// Normal form after first reducing the trailing pair.
    pub right: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub difference: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OverlapReport {
    pub ambiguities: Vec<Ambiguity>,
}

impl OverlapReport {
    pub fn resolvable(&self) -> bool {
        self.ambiguities.iter().all(|a| a.resolvable)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Ambiguity> {
        self.ambiguities.iter().filter(|a| !a.resolvable)
    }

    /// A single check named `overlaps` whose witness is the first failure.
    pub fn to_report(&self) -> Report {
        let mut r = Report::new();
        r.push(Check::from_result(
            "overlaps",
            self.failures()
                .next()
                .map(|a| witness(a.word.clone(), a.left.clone(), a.right.clone())),
        ));
        r
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for a in &self.ambiguities {
            let status = if a.resolvable { "resolvable" } else { "FAILS" };
            out.push_str(&format!("{:<16} {}", a.word.join(" "), status));
            if let Some(d) = &a.difference {
                out.push_str(&format!("  difference: {d}"));
            }
            out.push('\n');
        }
        out
    }
}

impl<J: CocommutativeHopf> Presentation<J> {
    /// Normal forms of a three-letter word when the rule at position 0,
    /// respectively position 1, is applied first.
    pub fn resolve(&self, letters: &[Letter<J::Key>]) -> Result<(NormalElement<J::Key>, NormalElement<J::Key>)> {
        let w = MixedWord(letters.to_vec());
        let left = self.normalize(&self.rewrite_at(&w, 0)?)?;
        let right = self.normalize(&self.rewrite_at(&w, 1)?)?;
        Ok((left, right))
    }

    /// Reduces every overlap `x y a` (`x >= y`, `a` a non-unit basis key from
    /// the sample basis) and `x y z` (`x >= y >= z`) both ways.
    pub fn check_overlaps(&self) -> Result<OverlapReport> {
        let n = self.dim_x();
        let unit = self.j().unit_key();
        let mut words = Vec::new();
        for x in 0..n {
            for y in 0..=x {
                for a in self.j().sample_basis() {
                    if Some(&a) != unit.as_ref() {
                        words.push(vec![Letter::X(x), Letter::X(y), Letter::J(a)]);
                    }
                }
                for z in 0..=y {
                    words.push(vec![Letter::X(x), Letter::X(y), Letter::X(z)]);
                }
            }
        }
        let mut report = OverlapReport::default();
        for w in words {
            let (l, r) = self.resolve(&w)?;
            let diff = l.minus(&r);
            report.ambiguities.push(Ambiguity {
                word: w.iter().map(|x| self.letter_name(x)).collect(),
                resolvable: diff.is_zero(),
                left: self.format_normal(&l),
                right: self.format_normal(&r),
                difference: (!diff.is_zero()).then(|| self.format_normal(&diff)),
            });
        }
        Ok(report)
    }
}

use std::ops::RangeInclusive;

use crate::fsystem::{FSystem, Limits, Witness};

use super::strand::char_len;
use super::{PumpError, PumpFamily, StrandPlan};

/// One `j` of a plan check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandCheck {
    pub j: usize,
    /// Rebuilt from the windows (empty below `j0`).
    pub core: String,
    pub procedure: String,
    pub core_matches_formula: bool,
    pub procedure_matches_formula: bool,
    pub core_member: bool,
    pub procedure_member: bool,
}

impl StrandCheck {
    pub fn passed(&self) -> bool {
        self.core_matches_formula
            && self.procedure_matches_formula
            && self.core_member
            && self.procedure_member
            && char_len(&self.core) == char_len(&self.procedure)
    }
}

/// One `i` of a family check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    pub i: usize,
    pub word: String,
    /// `None` means the word is not in the folded language.
    pub witness: Option<Witness>,
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub pumped_total: usize,
    /// Every window pair has equal length (always true for families).
    pub windows_aligned: bool,
    pub strands: Vec<StrandCheck>,
    pub family: Vec<FamilyCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.windows_aligned
            && self.pumped_total > 0
            && self.strands.iter().all(StrandCheck::passed)
            && self.family.iter().all(FamilyCheck::passed)
    }

    pub fn first_failure(&self) -> Option<String> {
        if !self.windows_aligned {
            return Some("window lengths differ between the strands".into());
        }
        if self.pumped_total == 0 {
            return Some("total pumped length is 0".into());
        }
        if let Some(c) = self.strands.iter().find(|c| !c.passed()) {
            return Some(format!(
                "j={}: r_j={:?} (formula {}, member {}), s_j={:?} (formula {}, member {})",
                c.j,
                c.core,
                c.core_matches_formula,
                c.core_member,
                c.procedure,
                c.procedure_matches_formula,
                c.procedure_member
            ));
        }
        self.family
            .iter()
            .find(|c| !c.passed())
            .map(|c| format!("i={}: {:?} is not in the folded language", c.i, c.word))
    }
}

/// Rebuilds `r_j`, `s_j` from the windows for every `j` in `js` and checks
/// them against the lemma's formulas and the component languages.
pub fn verify_plan(
    plan: &StrandPlan,
    phi: &FSystem,
    js: RangeInclusive<usize>,
) -> VerificationReport {
    let strands = js
        .map(|j| {
            let core = plan.reconstruct_core(j);
            let procedure = plan.reconstruct_procedure(j);
            StrandCheck {
                j,
                core_matches_formula: core.as_deref() == Some(plan.core_formula(j).as_str()),
                procedure_matches_formula: procedure.as_deref()
                    == Some(plan.procedure_formula(j).as_str()),
                core_member: core.as_deref().is_some_and(|w| phi.core().member(w)),
                procedure_member: procedure
                    .as_deref()
                    .is_some_and(|w| phi.procedure().member(w)),
                core: core.unwrap_or_default(),
                procedure: procedure.unwrap_or_default(),
            }
        })
        .collect();
    VerificationReport {
        pumped_total: plan.pumped_length(),
        windows_aligned: plan.xi.len() == plan.mu.len()
            && plan
                .xi
                .iter()
                .zip(&plan.mu)
                .all(|(x, m)| char_len(x) == char_len(m)),
        strands,
        family: Vec::new(),
    }
}

/// Decides membership of every pumped word in `is` with the exact oracle.
pub fn verify_family(
    family: &PumpFamily,
    phi: &FSystem,
    is: RangeInclusive<usize>,
    limits: &Limits,
) -> Result<VerificationReport, PumpError> {
    family.validate()?;
    if family.pumped_total() == 0 {
        return Err(PumpError::ZeroPumpedLength);
    }
    let mut checks = Vec::new();
    for i in is {
        let word = family.pumped_string(i);
        let witness = phi.member(&word, limits)?;
        checks.push(FamilyCheck { i, word, witness });
    }
    Ok(VerificationReport {
        pumped_total: family.pumped_total(),
        windows_aligned: true,
        strands: Vec::new(),
        family: checks,
    })
}

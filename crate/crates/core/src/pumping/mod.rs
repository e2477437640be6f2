//! Pumping for folding systems.
//!
//! Each lemma picks an equal-length pair `(r, s)`, decomposes both with the
//! pumping lemma of their class and defines sequences `r_j`, `s_j` whose
//! lengths grow at the same rate. The alignment of the two sequences is
//! cut into windows `xi_k` / `mu_k` of equal length, and folding window by
//! window turns the alignment into a pump family of the folded language.

mod family;
mod strand;
mod unary;
mod verify;

pub use family::{plan_to_family, PumpFamily};
pub use strand::{Block, Strand, WindowOffset, WindowSpec};
pub use unary::{is_prime, refute_unary_family, UnaryPredicate};
pub use verify::{verify_family, verify_plan, FamilyCheck, StrandCheck, VerificationReport};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cfg::{CfgDecomposition, ContextFreeLang};
use crate::fsystem::{FSystem, FsError, Language, LanguageKind};
use crate::limit::LimitExceeded;
use crate::regular::{RegDecomposition, RegularLang};

use strand::char_len;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LemmaKind {
    /// regular core, regular procedure
    #[serde(rename = "L1")]
    L1,
    /// context-free core, regular procedure
    #[serde(rename = "L2cfreg")]
    L2CfReg,
    /// regular core, context-free procedure
    #[serde(rename = "L2regcf")]
    L2RegCf,
    /// context-free core, context-free procedure
    #[serde(rename = "L3")]
    L3,
}

impl LemmaKind {
    pub fn for_kinds(core: LanguageKind, procedure: LanguageKind) -> LemmaKind {
        use LanguageKind::*;
        match (core, procedure) {
            (Regular, Regular) => LemmaKind::L1,
            (ContextFree, Regular) => LemmaKind::L2CfReg,
            (Regular, ContextFree) => LemmaKind::L2RegCf,
            (ContextFree, ContextFree) => LemmaKind::L3,
        }
    }

    /// Number of parts in the families this lemma produces.
    pub fn part_count(self) -> usize {
        match self {
            LemmaKind::L1 => 5,
            LemmaKind::L2CfReg | LemmaKind::L2RegCf => 9,
            LemmaKind::L3 => 13,
        }
    }
}

impl fmt::Display for LemmaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaKind::L1 => "L1",
            LemmaKind::L2CfReg => "L2cfreg",
            LemmaKind::L2RegCf => "L2regcf",
            LemmaKind::L3 => "L3",
        })
    }
}

/// Branches of the context-free/context-free construction, chosen by
/// comparing `|v_r||y_s|` with `|v_s||y_r|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lemma3Case {
    Greater,
    Less,
    EqualNonzero,
    /// `v_r = v_s = ε`
    VDegenerate,
    /// `y_r = y_s = ε`
    YDegenerate,
}

impl Lemma3Case {
    pub fn select(core: &CfgDecomposition, procedure: &CfgDecomposition) -> Lemma3Case {
        let lhs = char_len(&core.v) * char_len(&procedure.y);
        let rhs = char_len(&procedure.v) * char_len(&core.y);
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => Lemma3Case::Greater,
            std::cmp::Ordering::Less => Lemma3Case::Less,
            _ if lhs > 0 => Lemma3Case::EqualNonzero,
            // both products vanish; since |vy| > 0 on each side the only
            // possibilities are v_r = v_s = ε or y_r = y_s = ε
            _ if core.v.is_empty() && procedure.v.is_empty() => Lemma3Case::VDegenerate,
            _ => Lemma3Case::YDegenerate,
        }
    }
}

impl fmt::Display for Lemma3Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lemma3Case::Greater => "greater",
            Lemma3Case::Less => "less",
            Lemma3Case::EqualNonzero => "equal-nonzero",
            Lemma3Case::VDegenerate => "v-degenerate",
            Lemma3Case::YDegenerate => "y-degenerate",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceDecomposition {
    Regular(RegDecomposition),
    ContextFree(CfgDecomposition),
}

impl fmt::Display for SourceDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceDecomposition::Regular(d) => {
                write!(f, "x={:?} y={:?} z={:?}", d.x, d.y, d.z)
            }
            SourceDecomposition::ContextFree(d) => write!(
                f,
                "u={:?} v={:?} x={:?} y={:?} z={:?}",
                d.u, d.v, d.x, d.y, d.z
            ),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PumpError {
    #[error("FiniteComponent: the {0} language is finite, so the folded language is finite and the lemma is vacuous")]
    FiniteComponent(&'static str),
    #[error("NoEqualLengthPair: no length n in {min_len}..={ceiling} has both a core and a procedure word")]
    NoEqualLengthPair { min_len: usize, ceiling: usize },
    #[error("{lemma} needs a {expected} {component} language")]
    KindMismatch {
        lemma: LemmaKind,
        component: &'static str,
        expected: LanguageKind,
    },
    #[error("decomposition failed: {0}")]
    Decompose(String),
    #[error("CaseValidationFailed ({case}): {detail}")]
    CaseValidationFailed {
        case: String,
        window: usize,
        detail: String,
    },
    #[error("the family is not over a single symbol")]
    NonUnary,
    #[error("the family pumps nothing (total pumped length 0)")]
    ZeroPumpedLength,
    #[error("malformed family: {0}")]
    BadFamily(String),
    #[error(transparent)]
    Limit(#[from] LimitExceeded),
    #[error(transparent)]
    Fs(FsError),
}

impl From<FsError> for PumpError {
    fn from(e: FsError) -> Self {
        match e {
            FsError::NoEqualLengthPair { min_len, ceiling } => {
                PumpError::NoEqualLengthPair { min_len, ceiling }
            }
            FsError::Limit(l) => PumpError::Limit(l),
            other => PumpError::Fs(other),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanConfig {
    /// Largest `j0` tried before giving up.
    pub j0_bound: usize,
    /// How far past the minimum length the equal-length pair search looks.
    pub pair_span: usize,
    /// Refuse pumping lengths above this (the words get too long to check).
    pub max_pair_len: usize,
}

impl Default for PlanConfig {
    fn default() -> Self {
        PlanConfig {
            j0_bound: 64,
            pair_span: 256,
            max_pair_len: 4096,
        }
    }
}

/// The aligned windows of one lemma application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandPlan {
    pub lemma: LemmaKind,
    pub case: Option<Lemma3Case>,
    pub j0: usize,
    /// `xi_1 .. xi_m` (core side); even positions are pumped.
    pub xi: Vec<String>,
    /// `mu_1 .. mu_m` (procedure side).
    pub mu: Vec<String>,
    /// Offsets of the pumped windows inside their periodic blocks at `j0`.
    pub offsets: Vec<Option<WindowOffset>>,
    pub core_word: String,
    pub procedure_word: String,
    pub core_decomposition: SourceDecomposition,
    pub procedure_decomposition: SourceDecomposition,
    /// Block structure of `r_j` and `s_j`.
    pub top: Strand,
    pub bottom: Strand,
}

impl StrandPlan {
    pub fn window_count(&self) -> usize {
        self.xi.len()
    }

    /// 0-based indices of the pumped windows.
    pub fn pumped_window_indices(&self) -> Vec<usize> {
        (1..self.xi.len()).step_by(2).collect()
    }

    pub fn pumped_length(&self) -> usize {
        self.pumped_window_indices()
            .into_iter()
            .map(|k| char_len(&self.xi[k]))
            .sum()
    }

    fn interleave(windows: &[String], j: usize, j0: usize) -> Option<String> {
        let reps = j.checked_sub(j0)?;
        Some(
            windows
                .iter()
                .enumerate()
                .map(|(k, w)| {
                    if k % 2 == 1 {
                        w.repeat(reps)
                    } else {
                        w.clone()
                    }
                })
                .collect(),
        )
    }

    /// `r_j` rebuilt from the windows; `None` below `j0`.
    pub fn reconstruct_core(&self, j: usize) -> Option<String> {
        Self::interleave(&self.xi, j, self.j0)
    }

    pub fn reconstruct_procedure(&self, j: usize) -> Option<String> {
        Self::interleave(&self.mu, j, self.j0)
    }

    /// `r_j` from the lemma's block formula.
    pub fn core_formula(&self, j: usize) -> String {
        self.top.at(j)
    }

    pub fn procedure_formula(&self, j: usize) -> String {
        self.bottom.at(j)
    }
}

fn regular<'a>(
    lang: &'a Language,
    lemma: LemmaKind,
    component: &'static str,
) -> Result<&'a RegularLang, PumpError> {
    match lang {
        Language::Regular(l) => Ok(l),
        _ => Err(PumpError::KindMismatch {
            lemma,
            component,
            expected: LanguageKind::Regular,
        }),
    }
}

fn context_free<'a>(
    lang: &'a Language,
    lemma: LemmaKind,
    component: &'static str,
) -> Result<&'a ContextFreeLang, PumpError> {
    match lang {
        Language::ContextFree(l) => Ok(l),
        _ => Err(PumpError::KindMismatch {
            lemma,
            component,
            expected: LanguageKind::ContextFree,
        }),
    }
}

/// The deterministic `(r, s)` every lemma starts from: the smallest length
/// at least both pumping lengths, then the smallest words of that length.
fn select_pair(phi: &FSystem, config: &PlanConfig) -> Result<(String, String), PumpError> {
    if !phi.core().is_infinite() {
        return Err(PumpError::FiniteComponent("core"));
    }
    if !phi.procedure().is_infinite() {
        return Err(PumpError::FiniteComponent("procedure"));
    }
    let min_len = phi
        .core()
        .pumping_length()
        .max(phi.procedure().pumping_length());
    if min_len > config.max_pair_len {
        return Err(
            LimitExceeded::new(format!("pumping length {min_len}"), config.max_pair_len).into(),
        );
    }
    Ok(phi.equal_length_pair(min_len, min_len + config.pair_span)?)
}

fn reg_decompose(l: &RegularLang, w: &str) -> Result<RegDecomposition, PumpError> {
    l.decompose(w)
        .map_err(|e| PumpError::Decompose(e.to_string()))
}

fn cfg_decompose(l: &ContextFreeLang, w: &str) -> Result<CfgDecomposition, PumpError> {
    l.decompose(w)
        .map_err(|e| PumpError::Decompose(e.to_string()))
}

struct Layout {
    top: Strand,
    bottom: Strand,
    windows: Vec<WindowSpec>,
}

fn win(top: usize, bottom: usize, len: usize) -> WindowSpec {
    WindowSpec { top, bottom, len }
}

#[allow(clippy::too_many_arguments)]
fn finish(
    lemma: LemmaKind,
    case: Option<Lemma3Case>,
    layout: Layout,
    config: &PlanConfig,
    r: String,
    s: String,
    core_decomposition: SourceDecomposition,
    procedure_decomposition: SourceDecomposition,
) -> Result<StrandPlan, PumpError> {
    let Layout {
        top,
        bottom,
        windows,
    } = layout;
    debug_assert_eq!(top.at(0), r);
    debug_assert_eq!(bottom.at(0), s);
    let carved = strand::carve(&top, &bottom, &windows, config.j0_bound).map_err(|e| {
        PumpError::CaseValidationFailed {
            case: case.map_or_else(|| lemma.to_string(), |c| format!("{lemma} {c}")),
            window: e.window,
            detail: format!("{e} (j0 bound {})", config.j0_bound),
        }
    })?;
    Ok(StrandPlan {
        lemma,
        case,
        j0: carved.j0,
        xi: carved.xi,
        mu: carved.mu,
        offsets: carved.offsets,
        core_word: r,
        procedure_word: s,
        core_decomposition,
        procedure_decomposition,
        top,
        bottom,
    })
}

/// Regular core, regular procedure:
/// `r_j = x_r y_r^(|y_s| j + 1) z_r`, `s_j = x_s y_s^(|y_r| j + 1) z_s`.
pub fn lemma1_plan(phi: &FSystem, config: &PlanConfig) -> Result<StrandPlan, PumpError> {
    let lemma = LemmaKind::L1;
    let l1 = regular(phi.core(), lemma, "core")?;
    let l2 = regular(phi.procedure(), lemma, "procedure")?;
    let (r, s) = select_pair(phi, config)?;
    let dr = reg_decompose(l1, &r)?;
    let ds = reg_decompose(l2, &s)?;
    let (yr, ys) = (char_len(&dr.y), char_len(&ds.y));
    let layout = Layout {
        top: Strand::new(vec![
            Block::fixed(&dr.x),
            Block::periodic(&dr.y, ys),
            Block::fixed(&dr.z),
        ]),
        bottom: Strand::new(vec![
            Block::fixed(&ds.x),
            Block::periodic(&ds.y, yr),
            Block::fixed(&ds.z),
        ]),
        windows: vec![win(1, 1, yr * ys)],
    };
    finish(
        lemma,
        None,
        layout,
        config,
        r,
        s,
        SourceDecomposition::Regular(dr),
        SourceDecomposition::Regular(ds),
    )
}

/// Context-free core, regular procedure:
/// `r_j = u_r v_r^(|y_s| j + 1) x_r y_r^(|y_s| j + 1) z_r`,
/// `s_j = x_s y_s^(|v_r y_r| j + 1) z_s`.
pub fn lemma2_plan_cf_reg(phi: &FSystem, config: &PlanConfig) -> Result<StrandPlan, PumpError> {
    let lemma = LemmaKind::L2CfReg;
    let l1 = context_free(phi.core(), lemma, "core")?;
    let l2 = regular(phi.procedure(), lemma, "procedure")?;
    let (r, s) = select_pair(phi, config)?;
    let dr = cfg_decompose(l1, &r)?;
    let ds = reg_decompose(l2, &s)?;
    let (vr, yr, ys) = (char_len(&dr.v), char_len(&dr.y), char_len(&ds.y));
    let layout = Layout {
        top: Strand::new(vec![
            Block::fixed(&dr.u),
            Block::periodic(&dr.v, ys),
            Block::fixed(&dr.x),
            Block::periodic(&dr.y, ys),
            Block::fixed(&dr.z),
        ]),
        bottom: Strand::new(vec![
            Block::fixed(&ds.x),
            Block::periodic(&ds.y, vr + yr),
            Block::fixed(&ds.z),
        ]),
        windows: vec![win(1, 1, vr * ys), win(3, 1, yr * ys)],
    };
    finish(
        lemma,
        None,
        layout,
        config,
        r,
        s,
        SourceDecomposition::ContextFree(dr),
        SourceDecomposition::Regular(ds),
    )
}

/// Regular core, context-free procedure:
/// `r_j = x_r y_r^(|v_s y_s| j + 1) z_r`,
/// `s_j = u_s v_s^(|y_r| j + 1) x_s y_s^(|y_r| j + 1) z_s`.
pub fn lemma2_plan_reg_cf(phi: &FSystem, config: &PlanConfig) -> Result<StrandPlan, PumpError> {
    let lemma = LemmaKind::L2RegCf;
    let l1 = regular(phi.core(), lemma, "core")?;
    let l2 = context_free(phi.procedure(), lemma, "procedure")?;
    let (r, s) = select_pair(phi, config)?;
    let dr = reg_decompose(l1, &r)?;
    let ds = cfg_decompose(l2, &s)?;
    let (yr, vs, ys) = (char_len(&dr.y), char_len(&ds.v), char_len(&ds.y));
    let layout = Layout {
        top: Strand::new(vec![
            Block::fixed(&dr.x),
            Block::periodic(&dr.y, vs + ys),
            Block::fixed(&dr.z),
        ]),
        bottom: Strand::new(vec![
            Block::fixed(&ds.u),
            Block::periodic(&ds.v, yr),
            Block::fixed(&ds.x),
            Block::periodic(&ds.y, yr),
            Block::fixed(&ds.z),
        ]),
        windows: vec![win(1, 1, yr * vs), win(1, 3, yr * ys)],
    };
    finish(
        lemma,
        None,
        layout,
        config,
        r,
        s,
        SourceDecomposition::Regular(dr),
        SourceDecomposition::ContextFree(ds),
    )
}

fn five_blocks(d: &CfgDecomposition, growth: usize) -> Strand {
    Strand::new(vec![
        Block::fixed(&d.u),
        Block::periodic(&d.v, growth),
        Block::fixed(&d.x),
        Block::periodic(&d.y, growth),
        Block::fixed(&d.z),
    ])
}

fn lemma3_layout(case: Lemma3Case, dr: &CfgDecomposition, ds: &CfgDecomposition) -> Layout {
    let (vr, yr) = (char_len(&dr.v), char_len(&dr.y));
    let (vs, ys) = (char_len(&ds.v), char_len(&ds.y));
    match case {
        // the equal case reuses the greater construction; its middle
        // window comes out empty
        Lemma3Case::Greater | Lemma3Case::EqualNonzero => {
            let gr = vr * ys * (vs + ys);
            let gs = vr * ys * (vr + yr);
            Layout {
                top: five_blocks(dr, gr),
                bottom: five_blocks(ds, gs),
                windows: vec![
                    win(1, 1, vs * gs),
                    win(1, 3, vr * gr - vs * gs),
                    win(3, 3, yr * gr),
                ],
            }
        }
        Lemma3Case::Less => {
            let gr = vs * yr * (vs + ys);
            let gs = vs * yr * (vr + yr);
            Layout {
                top: five_blocks(dr, gr),
                bottom: five_blocks(ds, gs),
                windows: vec![
                    win(1, 1, vr * gr),
                    win(3, 1, vs * gs - vr * gr),
                    win(3, 3, ys * gs),
                ],
            }
        }
        Lemma3Case::VDegenerate => Layout {
            top: Strand::new(vec![
                Block::fixed(&format!("{}{}", dr.u, dr.x)),
                Block::periodic(&dr.y, ys),
                Block::fixed(&dr.z),
            ]),
            bottom: Strand::new(vec![
                Block::fixed(&format!("{}{}", ds.u, ds.x)),
                Block::periodic(&ds.y, yr),
                Block::fixed(&ds.z),
            ]),
            windows: vec![win(1, 1, yr * ys)],
        },
        Lemma3Case::YDegenerate => Layout {
            top: Strand::new(vec![
                Block::fixed(&dr.u),
                Block::periodic(&dr.v, vs),
                Block::fixed(&format!("{}{}", dr.x, dr.z)),
            ]),
            bottom: Strand::new(vec![
                Block::fixed(&ds.u),
                Block::periodic(&ds.v, vr),
                Block::fixed(&format!("{}{}", ds.x, ds.z)),
            ]),
            windows: vec![win(1, 1, vr * vs)],
        },
    }
}

/// Context-free core, context-free procedure. Both words get the shape
/// `u v^(g j + 1) x y^(g j + 1) z` with growth rates chosen so the strands
/// stay the same length; in the degenerate cases one pair of pumps is
/// empty on both sides and a three-window alignment suffices.
pub fn lemma3_plan(phi: &FSystem, config: &PlanConfig) -> Result<StrandPlan, PumpError> {
    let lemma = LemmaKind::L3;
    let l1 = context_free(phi.core(), lemma, "core")?;
    let l2 = context_free(phi.procedure(), lemma, "procedure")?;
    let (r, s) = select_pair(phi, config)?;
    let dr = cfg_decompose(l1, &r)?;
    let ds = cfg_decompose(l2, &s)?;
    let case = Lemma3Case::select(&dr, &ds);
    let layout = lemma3_layout(case, &dr, &ds);
    finish(
        lemma,
        Some(case),
        layout,
        config,
        r,
        s,
        SourceDecomposition::ContextFree(dr),
        SourceDecomposition::ContextFree(ds),
    )
}

/// Picks the lemma from the component kinds.
pub fn build_plan(phi: &FSystem, config: &PlanConfig) -> Result<StrandPlan, PumpError> {
    match LemmaKind::for_kinds(phi.core().kind(), phi.procedure().kind()) {
        LemmaKind::L1 => lemma1_plan(phi, config),
        LemmaKind::L2CfReg => lemma2_plan_cf_reg(phi, config),
        LemmaKind::L2RegCf => lemma2_plan_reg_cf(phi, config),
        LemmaKind::L3 => lemma3_plan(phi, config),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::fsystem::Limits;

    fn reg(text: &str, sigma: &Alphabet) -> Language {
        Language::Regular(RegularLang::parse(text, sigma).unwrap())
    }

    fn cf(text: &str, sigma: &Alphabet) -> Language {
        Language::ContextFree(ContextFreeLang::parse(text, sigma).unwrap())
    }

    fn ab() -> Alphabet {
        Alphabet::new(['a', 'b']).unwrap()
    }

    fn ud() -> Alphabet {
        Alphabet::procedure()
    }

    const ANBN: &str = "S -> a S b | eps";
    const UNDN: &str = "S -> u S d | eps";

    fn check(plan: &StrandPlan, phi: &FSystem) {
        assert_eq!(plan.xi.len(), plan.mu.len());
        for (x, m) in plan.xi.iter().zip(&plan.mu) {
            assert_eq!(char_len(x), char_len(m));
        }
        assert!(plan.pumped_length() > 0);
        let report = verify_plan(plan, phi, plan.j0..=plan.j0 + 3);
        assert!(report.passed(), "{report:?}");
        let family = plan_to_family(plan);
        assert_eq!(family.parts.len(), plan.lemma.part_count());
        let report = verify_family(&family, phi, 0..=3, &Limits::default()).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn aaaab_plan() {
        let phi = FSystem::new(reg("aaaab*", &ab()), reg("(uu)*ddd", &ud())).unwrap();
        let plan = build_plan(&phi, &PlanConfig::default()).unwrap();
        assert_eq!(plan.lemma, LemmaKind::L1);
        assert_eq!(
            (plan.core_word.as_str(), plan.procedure_word.as_str()),
            ("aaaabbb", "uuuuddd")
        );
        assert_eq!(plan.j0, 1);
        assert_eq!(plan.xi, ["aaaa", "bb", "bbbbb"]);
        assert_eq!(plan.mu, ["uuuu", "uu", "uuddd"]);
        check(&plan, &phi);
    }

    #[test]
    fn single_symbol_loops() {
        let a = Alphabet::new(['a']).unwrap();
        let phi = FSystem::new(reg("a*", &a), reg("d*", &ud())).unwrap();
        let plan = lemma1_plan(&phi, &PlanConfig::default()).unwrap();
        assert_eq!(plan.j0, 0);
        assert_eq!((plan.xi[1].as_str(), plan.mu[1].as_str()), ("a", "d"));
        check(&plan, &phi);
    }

    #[test]
    fn lemma2_windows() {
        let phi = FSystem::new(cf(ANBN, &ab()), reg("d*", &ud())).unwrap();
        let plan = build_plan(&phi, &PlanConfig::default()).unwrap();
        assert_eq!(plan.lemma, LemmaKind::L2CfReg);
        assert_eq!(plan.xi.len(), 5);
        assert_eq!((plan.xi[1].as_str(), plan.xi[3].as_str()), ("a", "b"));
        check(&plan, &phi);

        let phi = FSystem::new(cf(ANBN, &ab()), reg("(ud)*", &ud())).unwrap();
        let plan = build_plan(&phi, &PlanConfig::default()).unwrap();
        assert_eq!((plan.xi[1].as_str(), plan.xi[3].as_str()), ("aa", "bb"));
        check(&plan, &phi);
    }

    #[test]
    fn lemma2_mirrored_windows() {
        let a = Alphabet::new(['a']).unwrap();
        let phi = FSystem::new(reg("a*", &a), cf(UNDN, &ud())).unwrap();
        let plan = build_plan(&phi, &PlanConfig::default()).unwrap();
        assert_eq!(plan.lemma, LemmaKind::L2RegCf);
        assert_eq!((plan.mu[1].as_str(), plan.mu[3].as_str()), ("u", "d"));
        check(&plan, &phi);

        let phi = FSystem::new(reg("(ab)*", &ab()), cf(UNDN, &ud())).unwrap();
        let plan = build_plan(&phi, &PlanConfig::default()).unwrap();
        assert_eq!(char_len(&plan.xi[1]), 2);
        check(&plan, &phi);
    }

    #[test]
    fn lemma3_cases() {
        let equal = FSystem::new(cf(ANBN, &ab()), cf(UNDN, &ud())).unwrap();
        let plan = build_plan(&equal, &PlanConfig::default()).unwrap();
        assert_eq!(plan.case, Some(Lemma3Case::EqualNonzero));
        assert_eq!((plan.xi[3].as_str(), plan.mu[3].as_str()), ("", ""));
        check(&plan, &equal);

        let greater = FSystem::new(cf("S -> a a S b | eps", &ab()), cf(UNDN, &ud())).unwrap();
        let plan = build_plan(&greater, &PlanConfig::default()).unwrap();
        assert_eq!(plan.case, Some(Lemma3Case::Greater));
        assert_eq!(char_len(&plan.xi[3]), 2);
        check(&plan, &greater);

        let less = FSystem::new(cf(ANBN, &ab()), cf("S -> u u S d | eps", &ud())).unwrap();
        let plan = build_plan(&less, &PlanConfig::default()).unwrap();
        assert_eq!(plan.case, Some(Lemma3Case::Less));
        check(&plan, &less);

        let a = Alphabet::new(['a']).unwrap();
        let ydeg = FSystem::new(cf("S -> a S | eps", &a), cf("S -> d S | eps", &ud())).unwrap();
        let plan = build_plan(&ydeg, &PlanConfig::default()).unwrap();
        assert_eq!(plan.case, Some(Lemma3Case::YDegenerate));
        assert_eq!(plan.xi.len(), 3);
        check(&plan, &ydeg);

        let vdeg = FSystem::new(cf("S -> S a | eps", &a), cf("S -> S d | eps", &ud())).unwrap();
        let plan = build_plan(&vdeg, &PlanConfig::default()).unwrap();
        assert_eq!(plan.case, Some(Lemma3Case::VDegenerate));
        check(&plan, &vdeg);
    }

    #[test]
    fn errors() {
        let finite = FSystem::new(reg("aaaab", &ab()), reg("d*", &ud())).unwrap();
        assert_eq!(
            build_plan(&finite, &PlanConfig::default()),
            Err(PumpError::FiniteComponent("core"))
        );
        let disjoint = FSystem::new(reg("(aa)*", &ab()), reg("d(dd)*", &ud())).unwrap();
        assert!(matches!(
            build_plan(&disjoint, &PlanConfig::default()),
            Err(PumpError::NoEqualLengthPair { .. })
        ));
        let phi = FSystem::new(reg("a*", &ab()), reg("d*", &ud())).unwrap();
        assert!(matches!(
            lemma3_plan(&phi, &PlanConfig::default()),
            Err(PumpError::KindMismatch { .. })
        ));
    }

    #[test]
    fn case_selector_is_total() {
        let d = |v: &str, y: &str| CfgDecomposition {
            u: String::new(),
            v: v.into(),
            x: String::new(),
            y: y.into(),
            z: String::new(),
        };
        assert_eq!(
            Lemma3Case::select(&d("aa", "b"), &d("u", "d")),
            Lemma3Case::Greater
        );
        assert_eq!(
            Lemma3Case::select(&d("a", "b"), &d("uu", "d")),
            Lemma3Case::Less
        );
        assert_eq!(
            Lemma3Case::select(&d("a", "b"), &d("u", "d")),
            Lemma3Case::EqualNonzero
        );
        assert_eq!(
            Lemma3Case::select(&d("", "b"), &d("", "d")),
            Lemma3Case::VDegenerate
        );
        assert_eq!(
            Lemma3Case::select(&d("a", ""), &d("u", "")),
            Lemma3Case::YDegenerate
        );
        // v_r = ε with y_s = ε makes the left product 0 while the right is positive
        assert_eq!(
            Lemma3Case::select(&d("", "b"), &d("u", "")),
            Lemma3Case::Less
        );
    }
}

use serde::{Deserialize, Serialize};

use crate::folding::{split_updown, ProcString};

use super::strand::char_len;
use super::{LemmaKind, PumpError, StrandPlan};

/// `(w_1, ..., w_k)` with the parts listed in `pumped` (0-based) repeated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PumpFamily {
    pub parts: Vec<String>,
    pub pumped: Vec<usize>,
    pub lemma: LemmaKind,
    pub j0: usize,
}

impl PumpFamily {
    /// Pumped indices must be in range and strictly increasing.
    pub fn validate(&self) -> Result<(), PumpError> {
        if let Some(&k) = self.pumped.iter().find(|&&k| k >= self.parts.len()) {
            return Err(PumpError::BadFamily(format!(
                "pumped index {k} but only {} parts",
                self.parts.len()
            )));
        }
        if self.pumped.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PumpError::BadFamily(
                "pumped indices must be strictly increasing".into(),
            ));
        }
        Ok(())
    }

    pub fn is_pumped(&self, k: usize) -> bool {
        self.pumped.binary_search(&k).is_ok()
    }

    pub fn pumped_string(&self, i: usize) -> String {
        self.parts
            .iter()
            .enumerate()
            .map(|(k, w)| {
                if self.is_pumped(k) {
                    w.repeat(i)
                } else {
                    w.clone()
                }
            })
            .collect()
    }

    pub fn pumped_total(&self) -> usize {
        self.pumped.iter().map(|&k| char_len(&self.parts[k])).sum()
    }

    pub fn fixed_total(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .filter(|(k, _)| !self.is_pumped(*k))
            .map(|(_, w)| char_len(w))
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data always serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, PumpError> {
        let family: PumpFamily =
            serde_json::from_str(text).map_err(|e| PumpError::BadFamily(e.to_string()))?;
        family.validate()?;
        Ok(family)
    }
}

/// Folds the plan window by window. With `m` windows the parts are
///
/// ```text
/// rev(up(xi_m)), ..., rev(up(xi_2)), rev(up(xi_1)) down(xi_1), down(xi_2), ..., down(xi_m)
/// ```
///
/// where each window is split by its procedure window. A three-window
/// plan for the context-free/context-free case is first padded with empty
/// windows so that its family has the same thirteen-part shape.
pub fn plan_to_family(plan: &StrandPlan) -> PumpFamily {
    let mut windows: Vec<(&str, &str)> = plan
        .xi
        .iter()
        .zip(&plan.mu)
        .map(|(x, m)| (x.as_str(), m.as_str()))
        .collect();
    if plan.lemma == LemmaKind::L3 && windows.len() == 3 {
        windows.splice(1..1, [("", ""); 4]);
    }
    let split: Vec<(String, String)> = windows
        .iter()
        .map(|(x, m)| {
            let v: ProcString = m.parse().expect("procedure windows are over u and d");
            split_updown(x, &v).expect("windows have equal length")
        })
        .collect();
    let m = split.len();
    let mut parts = Vec::with_capacity(2 * m - 1);
    for (up, _) in split[1..].iter().rev() {
        parts.push(up.chars().rev().collect());
    }
    let (up1, down1) = &split[0];
    parts.push(up1.chars().rev().chain(down1.chars()).collect());
    for (_, down) in &split[1..] {
        parts.push(down.clone());
    }
    let mut pumped = Vec::new();
    for k in (1..m).step_by(2) {
        // window k (0-based) feeds parts m-1-k and m-1+k
        pumped.push(m - 1 - k);
        pumped.push(m - 1 + k);
    }
    pumped.sort_unstable();
    PumpFamily {
        parts,
        pumped,
        lemma: plan.lemma,
        j0: plan.j0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pumping::SourceDecomposition;
    use crate::pumping::{Block, Strand};
    use crate::regular::RegDecomposition;

    fn plan(xi: &[&str], mu: &[&str], lemma: LemmaKind) -> StrandPlan {
        let d = SourceDecomposition::Regular(RegDecomposition {
            x: String::new(),
            y: String::new(),
            z: String::new(),
        });
        StrandPlan {
            lemma,
            case: None,
            j0: 1,
            xi: xi.iter().map(|s| s.to_string()).collect(),
            mu: mu.iter().map(|s| s.to_string()).collect(),
            offsets: vec![],
            core_word: String::new(),
            procedure_word: String::new(),
            core_decomposition: d.clone(),
            procedure_decomposition: d,
            top: Strand::new(vec![Block::fixed("")]),
            bottom: Strand::new(vec![Block::fixed("")]),
        }
    }

    #[test]
    fn aaaab_family() {
        let p = plan(
            &["aaaa", "bb", "bbbbb"],
            &["uuuu", "uu", "uuddd"],
            LemmaKind::L1,
        );
        let f = plan_to_family(&p);
        assert_eq!(f.parts, ["bb", "bb", "aaaa", "", "bbb"]);
        assert_eq!(f.pumped, [1, 3]);
        assert_eq!(f.pumped_string(0), "bbaaaabbb");
        assert_eq!(f.pumped_string(1), "bbbbaaaabbb");
        assert_eq!(f.pumped_total(), 2);
    }

    #[test]
    fn all_down_windows() {
        let p = plan(&["ab", "a", "b"], &["dd", "d", "d"], LemmaKind::L1);
        let f = plan_to_family(&p);
        assert_eq!(f.parts, ["", "", "ab", "a", "b"]);
    }

    #[test]
    fn padded_degenerate_family() {
        let p = plan(&["a", "aa", "a"], &["u", "dd", "d"], LemmaKind::L3);
        let f = plan_to_family(&p);
        assert_eq!(f.parts.len(), 13);
        assert_eq!(f.pumped, [1, 3, 5, 7, 9, 11]);
        assert!(f.parts[2..=5].iter().all(String::is_empty));
        assert_eq!(f.parts[6], "a");
        assert_eq!(f.parts[11], "aa");
    }

    #[test]
    fn json_round_trip() {
        let p = plan(
            &["aaaa", "bb", "bbbbb"],
            &["uuuu", "uu", "uuddd"],
            LemmaKind::L1,
        );
        let json = plan_to_family(&p).to_json();
        assert_eq!(
            json,
            r#"{"parts":["bb","bb","aaaa","","bbb"],"pumped":[1,3],"lemma":"L1","j0":1}"#
        );
        assert_eq!(PumpFamily::from_json(&json).unwrap().to_json(), json);
    }

    #[test]
    fn malformed_json() {
        assert!(PumpFamily::from_json("{}").is_err());
        assert!(
            PumpFamily::from_json(r#"{"parts":["a"],"pumped":[1],"lemma":"L1","j0":0}"#).is_err()
        );
        assert!(
            PumpFamily::from_json(r#"{"parts":["a","b"],"pumped":[1,1],"lemma":"L1","j0":0}"#)
                .is_err()
        );
        assert!(PumpFamily::from_json(r#"{"parts":[],"pumped":[],"lemma":"L9","j0":0}"#).is_err());
    }
}

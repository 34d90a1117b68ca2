//! Per-(series, size) means and standard errors.

use std::fmt::Write as _;

use crate::row::{series_label, ExperimentRow};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatSummary {
    /// Mean over rows where the statistic is defined.
    pub mean: Option<f64>,
    /// Sample standard deviation over `sqrt(used)`; 0 for a single value.
    pub std_error: Option<f64>,
    pub used: usize,
    /// Rows where the statistic was undefined.
    pub excluded: usize,
}

impl StatSummary {
    pub fn from_values(values: impl IntoIterator<Item = Option<f64>>) -> Self {
        let mut defined = Vec::new();
        let mut excluded = 0;
        for v in values {
            match v {
                Some(x) => defined.push(x),
                None => excluded += 1,
            }
        }
        let used = defined.len();
        if used == 0 {
            return Self {
                mean: None,
                std_error: None,
                used,
                excluded,
            };
        }
        let mean = defined.iter().sum::<f64>() / used as f64;
        let std_error = if used == 1 {
            0.0
        } else {
            let var = defined.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (used - 1) as f64;
            (var / used as f64).sqrt()
        };
        Self {
            mean: Some(mean),
            std_error: Some(std_error),
            used,
            excluded,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupSummary {
    pub model: String,
    pub sigma: Option<f64>,
    pub n_target: usize,
    pub rows: usize,
    pub n_realized: StatSummary,
    pub edges: StatSummary,
    pub components: StatSummary,
    pub clustering: StatSummary,
    pub assortativity: StatSummary,
    pub core_share: StatSummary,
}

impl GroupSummary {
    pub fn series_label(&self) -> String {
        series_label(&self.model, self.sigma)
    }
}

/// Groups rows by `(model, sigma, n_target)` in order of first appearance.
pub fn summarize(rows: &[ExperimentRow]) -> Result<Vec<GroupSummary>, Error> {
    if rows.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut groups: Vec<(&str, Option<f64>, usize, Vec<&ExperimentRow>)> = Vec::new();
    for row in rows {
        let found = groups.iter_mut().find(|(m, s, n, _)| {
            *m == row.model && s.map(f64::to_bits) == row.sigma.map(f64::to_bits) && *n == row.n_target
        });
        match found {
            Some(g) => g.3.push(row),
            None => groups.push((&row.model, row.sigma, row.n_target, vec![row])),
        }
    }
    Ok(groups
        .into_iter()
        .map(|(model, sigma, n_target, members)| {
            let stat =
                |f: &dyn Fn(&ExperimentRow) -> Option<f64>| StatSummary::from_values(members.iter().map(|r| f(r)));
            GroupSummary {
                model: model.to_string(),
                sigma,
                n_target,
                rows: members.len(),
                n_realized: stat(&|r| Some(r.n_realized as f64)),
                edges: stat(&|r| Some(r.edges as f64)),
                components: stat(&|r| Some(r.components as f64)),
                clustering: stat(&|r| r.clustering),
                assortativity: stat(&|r| r.assortativity),
                core_share: stat(&|r| r.core_share),
            }
        })
        .collect())
}

pub const SUMMARY_HEADER: &str = "model,sigma,n_target,rows,statistic,mean,std_error,used,excluded";

/// One line per (group, statistic).
pub fn summary_csv(groups: &[GroupSummary]) -> String {
    let mut out = String::from(SUMMARY_HEADER);
    out.push('\n');
    let opt = |x: Option<f64>| x.map(|v| format!("{v}")).unwrap_or_default();
    for g in groups {
        for (name, s) in [
            ("n_realized", &g.n_realized),
            ("edges", &g.edges),
            ("components", &g.components),
            ("clustering", &g.clustering),
            ("assortativity", &g.assortativity),
            ("core_share", &g.core_share),
        ] {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                g.model,
                opt(g.sigma),
                g.n_target,
                g.rows,
                name,
                opt(s.mean),
                opt(s.std_error),
                s.used,
                s.excluded
            )
            .unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(model: &str, n: usize, clustering: Option<f64>) -> ExperimentRow {
        ExperimentRow {
            model: model.into(),
            sigma: None,
            n_target: n,
            n_realized: n,
            edges: 10,
            replicate: 0,
            seed: 0,
            components: 1,
            clustering,
            assortativity: None,
            core_share: Some(0.5),
        }
    }

    #[test]
    fn single_row_group() {
        let s = summarize(&[row("er", 10, Some(0.25))]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].clustering.mean, Some(0.25));
        assert_eq!(s[0].clustering.std_error, Some(0.0));
    }

    #[test]
    fn two_rows_mean_and_se() {
        let s = summarize(&[row("er", 10, Some(0.2)), row("er", 10, Some(0.4))]).unwrap();
        let c = s[0].clustering;
        assert!((c.mean.unwrap() - 0.3).abs() < 1e-15);
        assert!((c.std_error.unwrap() - 0.1).abs() < 1e-15);
    }

    #[test]
    fn undefined_values_are_excluded() {
        let s = summarize(&[row("er", 10, None), row("er", 10, None), row("ba", 10, Some(0.1))]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].assortativity.mean, None);
        assert_eq!(s[0].assortativity.excluded, 2);
        assert_eq!(s[0].clustering.excluded, 2);
        assert_eq!(s[1].model, "ba");
    }

    #[test]
    fn empty_input() {
        assert!(matches!(summarize(&[]), Err(Error::EmptyInput)));
    }
}

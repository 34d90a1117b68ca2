//! The per-replicate CSV record.

use std::fmt::Write as _;

use sparsenet_core::stats::{
    assortativity, connected_components, core_periphery, global_clustering, CoreConfig, StatsError,
};
use sparsenet_core::{Graph, Seed};

use crate::Error;

pub const CSV_HEADER: &str =
    "model,sigma,n_target,n_realized,edges,replicate,seed,components,clustering,assortativity,core_share";

/// The four statistics of one graph. `None` marks an undefined value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphStatistics {
    pub components: usize,
    pub clustering: Option<f64>,
    pub assortativity: Option<f64>,
    pub core_share: Option<f64>,
}

impl GraphStatistics {
    pub fn compute(g: &Graph, core: &CoreConfig) -> Result<Self, StatsError> {
        let components = connected_components(g).count;
        let clustering = global_clustering(g).coefficient();
        let assortativity = match assortativity(g) {
            Ok(a) => a.r,
            Err(StatsError::EmptyGraph) => None,
            Err(e) => return Err(e),
        };
        let core_share = match core_periphery(g, core) {
            Ok(r) => Some(r.core_share()),
            Err(StatsError::EmptyGraph | StatsError::DegeneratePattern) => None,
            Err(e) => return Err(e),
        };
        Ok(Self {
            components,
            clustering,
            assortativity,
            core_share,
        })
    }
}

/// Seed of the core/periphery optimizer for a graph generated from `seed`.
pub fn core_seed(seed: Seed) -> Seed {
    seed.child(u64::MAX)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    pub model: String,
    pub sigma: Option<f64>,
    pub n_target: usize,
    pub n_realized: usize,
    pub edges: usize,
    pub replicate: usize,
    pub seed: u64,
    pub components: usize,
    pub clustering: Option<f64>,
    pub assortativity: Option<f64>,
    pub core_share: Option<f64>,
}

/// Identifies a row within a sweep: `(model, sigma bits, n_target, replicate)`.
pub type RowKey = (String, Option<u64>, usize, usize);

impl ExperimentRow {
    pub fn key(&self) -> RowKey {
        (
            self.model.clone(),
            self.sigma.map(f64::to_bits),
            self.n_target,
            self.replicate,
        )
    }

    /// The series this row belongs to in plots and summaries.
    pub fn series_label(&self) -> String {
        series_label(&self.model, self.sigma)
    }

    pub fn to_csv_line(&self) -> String {
        let mut s = String::new();
        write!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.model,
            fmt_opt(self.sigma),
            self.n_target,
            self.n_realized,
            self.edges,
            self.replicate,
            self.seed,
            self.components,
            fmt_opt(self.clustering),
            fmt_opt(self.assortativity),
            fmt_opt(self.core_share),
        )
        .unwrap();
        s
    }

    pub fn parse_csv_line(line: &str, line_no: usize) -> Result<Self, Error> {
        let bad = |msg: String| Error::Csv { line: line_no, msg };
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 11 {
            return Err(bad(format!("expected 11 fields, found {}", fields.len())));
        }
        let int = |i: usize| {
            fields[i]
                .parse::<u64>()
                .map_err(|_| bad(format!("field {} is not an integer", i + 1)))
        };
        let opt = |i: usize| -> Result<Option<f64>, Error> {
            if fields[i].is_empty() {
                Ok(None)
            } else {
                fields[i]
                    .parse::<f64>()
                    .map(Some)
                    .map_err(|_| bad(format!("field {} is not a number", i + 1)))
            }
        };
        if fields[0].is_empty() {
            return Err(bad("empty model".into()));
        }
        Ok(Self {
            model: fields[0].to_string(),
            sigma: opt(1)?,
            n_target: int(2)? as usize,
            n_realized: int(3)? as usize,
            edges: int(4)? as usize,
            replicate: int(5)? as usize,
            seed: int(6)?,
            components: int(7)? as usize,
            clustering: opt(8)?,
            assortativity: opt(9)?,
            core_share: opt(10)?,
        })
    }
}

pub fn series_label(model: &str, sigma: Option<f64>) -> String {
    match sigma {
        Some(s) => format!("{model} sigma={s}"),
        None => model.to_string(),
    }
}

/// Shortest round-trip decimal; blank for undefined.
fn fmt_opt(x: Option<f64>) -> String {
    x.map(|v| format!("{v}")).unwrap_or_default()
}

pub fn to_csv(rows: &[ExperimentRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv_line());
        out.push('\n');
    }
    out
}

pub fn parse_csv(text: &str) -> Result<Vec<ExperimentRow>, Error> {
    let mut lines = text.split_terminator('\n');
    match lines.next() {
        Some(CSV_HEADER) => {}
        _ => {
            return Err(Error::Csv {
                line: 1,
                msg: "missing or unexpected header".into(),
            })
        }
    }
    lines
        .enumerate()
        .map(|(i, line)| ExperimentRow::parse_csv_line(line, i + 2))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row() -> ExperimentRow {
        ExperimentRow {
            model: "ggp".into(),
            sigma: Some(0.5),
            n_target: 200,
            n_realized: 213,
            edges: 517,
            replicate: 3,
            seed: 12345678901234567890,
            components: 4,
            clustering: Some(0.1),
            assortativity: None,
            core_share: Some(1.0 / 3.0),
        }
    }

    #[test]
    fn golden_line() {
        assert_eq!(
            row().to_csv_line(),
            "ggp,0.5,200,213,517,3,12345678901234567890,4,0.1,,0.3333333333333333"
        );
        let er = ExperimentRow {
            model: "er".into(),
            sigma: None,
            ..row()
        };
        assert!(er.to_csv_line().starts_with("er,,200,"));
    }

    #[test]
    fn parse_inverts_format() {
        let rows = vec![
            row(),
            ExperimentRow {
                sigma: Some(0.0),
                ..row()
            },
        ];
        let text = to_csv(&rows);
        assert!(text.starts_with(CSV_HEADER));
        assert_eq!(parse_csv(&text).unwrap(), rows);
        assert_eq!(to_csv(&parse_csv(&text).unwrap()), text);
    }

    #[test]
    fn rejects_bad_csv() {
        assert!(parse_csv("model\n").is_err());
        let text = format!("{CSV_HEADER}\nggp,0.5,200\n");
        assert!(matches!(parse_csv(&text), Err(Error::Csv { line: 2, .. })));
    }

    #[test]
    fn statistics_of_star() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = GraphStatistics::compute(&g, &CoreConfig::default()).unwrap();
        assert_eq!(s.components, 1);
        assert_eq!(s.clustering, Some(0.0));
        assert!((s.assortativity.unwrap() + 1.0).abs() < 1e-12);
        assert_eq!(s.core_share, Some(0.25));

        let empty = Graph::new(3, &[]).unwrap();
        let s = GraphStatistics::compute(&empty, &CoreConfig::default()).unwrap();
        assert_eq!(
            (s.components, s.clustering, s.assortativity, s.core_share),
            (3, None, None, None)
        );
    }
}

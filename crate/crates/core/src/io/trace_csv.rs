use std::io::Write;

use crate::attack::AttackTrace;
use crate::error::Result;

pub const CSV_HEADER: [&str; 9] = [
    "strategy",
    "model_or_dataset",
    "seed",
    "iteration",
    "removed_step",
    "removed_cum",
    "f",
    "lcc_size",
    "lcc_prime",
];

/// A trace with the provenance columns that go with it.
#[derive(Clone, Copy, Debug)]
pub struct LabeledTrace<'a> {
    pub trace: &'a AttackTrace,
    /// Dataset name or generator description.
    pub source: &'a str,
    /// `None` for ingested datasets, written as `-`.
    pub seed: Option<u64>,
}

/// Writes the header and one row per trace row, reals with six decimals.
/// Returns the number of data rows.
pub fn write_trace_csv<W: Write>(traces: &[LabeledTrace<'_>], out: W) -> Result<usize> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    writer.write_record(CSV_HEADER)?;
    let mut rows = 0;
    for labeled in traces {
        let seed = labeled.seed.map_or_else(|| "-".to_owned(), |s| s.to_string());
        let code = labeled.trace.strategy.code();
        for row in &labeled.trace.rows {
            writer.write_record([
                code.as_str(),
                labeled.source,
                seed.as_str(),
                &row.iteration.to_string(),
                &row.removed.len().to_string(),
                &row.removed_cum.to_string(),
                &format!("{:.6}", row.f),
                &row.lcc_size.to_string(),
                &format!("{:.6}", row.lcc_prime),
            ])?;
            rows += 1;
        }
    }
    writer.flush()?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attack::AttackStrategy;
    use crate::graph::named;

    fn render(traces: &[LabeledTrace<'_>]) -> (usize, String) {
        let mut out = Vec::new();
        let rows = write_trace_csv(traces, &mut out).unwrap();
        (rows, String::from_utf8(out).unwrap())
    }

    #[test]
    fn empty_list_writes_header_only() {
        let (rows, text) = render(&[]);
        assert_eq!(rows, 0);
        assert_eq!(
            text,
            "strategy,model_or_dataset,seed,iteration,removed_step,removed_cum,f,lcc_size,lcc_prime\n"
        );
    }

    #[test]
    fn star_trace_rows() {
        let trace = "RD".parse::<AttackStrategy>().unwrap().run(&named::star(5)).unwrap();
        let (rows, text) = render(&[LabeledTrace {
            trace: &trace,
            source: "star",
            seed: None,
        }]);
        assert_eq!(rows, 2);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "RD,star,-,0,0,0,0.000000,6,1.000000");
        assert_eq!(lines[2], "RD,star,-,1,1,1,0.166667,1,0.166667");
    }

    #[test]
    fn seeds_and_awkward_names() {
        let trace = "IM".parse::<AttackStrategy>().unwrap().run(&named::path(5)).unwrap();
        let (_, text) = render(&[LabeledTrace {
            trace: &trace,
            source: "a,b",
            seed: Some(7),
        }]);
        assert!(text.lines().nth(1).unwrap().starts_with("IM,\"a,b\",7,0,"));
    }
}

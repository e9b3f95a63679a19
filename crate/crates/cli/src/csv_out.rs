//! CSV files for external plotting.
//!
//! UTF-8, one header row, one record per line. Reals use the shortest
//! decimal that round-trips to the same `f64`.

use std::io::Write;

use polycoef::{ErrorRecord, PmfPoint};

pub const ERROR_HEADER: [&str; 6] = ["m", "l", "n", "exact_log", "approx_log", "rel_error"];
pub const PMF_HEADER: [&str; 6] = ["m", "l", "n", "exact_pmf", "normal_density", "cc_phi"];

fn writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().has_headers(false).from_writer(out)
}

pub fn write_error_records<W: Write>(out: W, records: &[ErrorRecord]) -> csv::Result<()> {
    let mut w = writer(out);
    w.write_record(ERROR_HEADER)?;
    for r in records {
        w.serialize((r.m, r.l, r.n, r.exact_log, r.approx_log, r.rel_error))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_pmf_points<W: Write>(out: W, points: &[PmfPoint]) -> csv::Result<()> {
    let mut w = writer(out);
    w.write_record(PMF_HEADER)?;
    for p in points {
        w.serialize((p.m, p.l, p.n, p.exact, p.normal_density, p.cc_phi))?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_csv_layout() {
        let records = [ErrorRecord::new(10, 4, 3, 1.5, 1.25), ErrorRecord::new(10, 4, 4, 2.0, 2.0)];
        let mut buf = Vec::new();
        write_error_records(&mut buf, &records).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "m,l,n,exact_log,approx_log,rel_error");
        assert_eq!(lines[2], "10,4,4,2.0,2.0,0.0");
        let fields: Vec<&str> = lines[1].split(',').collect();
        assert_eq!(&fields[..5], ["10", "4", "3", "1.5", "1.25"]);
        assert_eq!(fields[5].parse::<f64>().unwrap(), records[0].rel_error);
    }

    #[test]
    fn reals_round_trip() {
        let r = ErrorRecord::new(1, 1, 0, 0.1 + 0.2, 1e-300);
        let mut buf = Vec::new();
        write_error_records(&mut buf, &[r]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let row: Vec<f64> = text.lines().nth(1).unwrap().split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(row[3], r.exact_log);
        assert_eq!(row[4], r.approx_log);
        assert_eq!(row[5], r.rel_error);
    }
}

//! Reader and writer for a subset of the TSPLIB95 instance format.
//!
//! Supported: `TYPE: TSP` with `EDGE_WEIGHT_TYPE` EUC_2D (node coordinates,
//! distances rounded half-up per the format's nint convention, or kept exact
//! on request) and EXPLICIT with `EDGE_WEIGHT_FORMAT` FULL_MATRIX or
//! LOWER_DIAG_ROW. Anything else is rejected with its line and column.
//! Diagonal entries of explicit matrices are ignored, as the format
//! prescribes.

use crate::error::Error;
use crate::instance::MetricInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExplicitFormat {
    FullMatrix,
    LowerDiagRow,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace tokens of a line with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..idx]));
            }
        } else if start.is_none() {
            start = Some(idx);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// TSPLIB nint: round half away from zero (all distances are nonnegative).
fn nint(x: f64) -> f64 {
    (x + 0.5).floor()
}

pub fn parse_tsplib(text: &str, exact_euclidean: bool) -> Result<MetricInstance, Error> {
    let lines: Vec<&str> = text.lines().collect();
    let mut dimension: Option<usize> = None;
    let mut weight_type: Option<String> = None;
    let mut weight_format: Option<String> = None;
    let mut saw_type_tsp = false;
    let mut coords: Option<Vec<(f64, f64)>> = None;
    let mut explicit: Option<Vec<f64>> = None;

    let mut idx = 0;
    while idx < lines.len() {
        let lineno = idx + 1;
        let raw = lines[idx];
        idx += 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(colon) = raw.find(':') {
            let key = raw[..colon].trim();
            let value = raw[colon + 1..].trim();
            match key {
                "NAME" | "COMMENT" => {}
                "TYPE" => {
                    if value != "TSP" {
                        return Err(parse_err(
                            lineno,
                            colon + 2,
                            format!("unsupported TYPE {value:?}; only TSP is handled"),
                        ));
                    }
                    saw_type_tsp = true;
                }
                "DIMENSION" => {
                    let n: usize = value.parse().map_err(|_| {
                        parse_err(lineno, colon + 2, format!("bad DIMENSION {value:?}"))
                    })?;
                    dimension = Some(n);
                }
                "EDGE_WEIGHT_TYPE" => match value {
                    "EUC_2D" | "EXPLICIT" => weight_type = Some(value.to_string()),
                    other => {
                        return Err(parse_err(
                            lineno,
                            colon + 2,
                            format!("unsupported EDGE_WEIGHT_TYPE {other:?}"),
                        ))
                    }
                },
                "EDGE_WEIGHT_FORMAT" => match value {
                    "FULL_MATRIX" | "LOWER_DIAG_ROW" => weight_format = Some(value.to_string()),
                    other => {
                        return Err(parse_err(
                            lineno,
                            colon + 2,
                            format!("unsupported EDGE_WEIGHT_FORMAT {other:?}"),
                        ))
                    }
                },
                other => {
                    return Err(parse_err(lineno, 1, format!("unsupported keyword {other:?}")));
                }
            }
            continue;
        }
        match trimmed {
            "NODE_COORD_SECTION" => {
                let n = dimension
                    .ok_or_else(|| parse_err(lineno, 1, "NODE_COORD_SECTION before DIMENSION"))?;
                let mut pts = vec![None; n];
                for _ in 0..n {
                    if idx >= lines.len() {
                        return Err(parse_err(idx, 1, "unexpected end of file in coordinates"));
                    }
                    let lineno = idx + 1;
                    let toks = tokens(lines[idx]);
                    idx += 1;
                    if toks.len() != 3 {
                        return Err(parse_err(
                            lineno,
                            1,
                            format!("expected \"id x y\", found {} token(s)", toks.len()),
                        ));
                    }
                    let id: usize = toks[0].1.parse().map_err(|_| {
                        parse_err(lineno, toks[0].0, format!("bad node id {:?}", toks[0].1))
                    })?;
                    if id == 0 || id > n {
                        return Err(parse_err(
                            lineno,
                            toks[0].0,
                            format!("node id {id} outside 1..={n}"),
                        ));
                    }
                    let x: f64 = toks[1].1.parse().map_err(|_| {
                        parse_err(lineno, toks[1].0, format!("bad coordinate {:?}", toks[1].1))
                    })?;
                    let y: f64 = toks[2].1.parse().map_err(|_| {
                        parse_err(lineno, toks[2].0, format!("bad coordinate {:?}", toks[2].1))
                    })?;
                    if pts[id - 1].replace((x, y)).is_some() {
                        return Err(parse_err(lineno, toks[0].0, format!("duplicate node id {id}")));
                    }
                }
                coords = Some(pts.into_iter().map(|p| p.expect("all ids seen")).collect());
            }
            "EDGE_WEIGHT_SECTION" => {
                let n = dimension
                    .ok_or_else(|| parse_err(lineno, 1, "EDGE_WEIGHT_SECTION before DIMENSION"))?;
                let format = weight_format.as_deref().ok_or_else(|| {
                    parse_err(lineno, 1, "EDGE_WEIGHT_SECTION before EDGE_WEIGHT_FORMAT")
                })?;
                let needed = match format {
                    "FULL_MATRIX" => n * n,
                    "LOWER_DIAG_ROW" => n * (n + 1) / 2,
                    _ => unreachable!("formats filtered at the keyword"),
                };
                let mut values = Vec::with_capacity(needed);
                while values.len() < needed {
                    if idx >= lines.len() {
                        return Err(parse_err(
                            idx,
                            1,
                            format!("weight section ended after {} of {needed} values", values.len()),
                        ));
                    }
                    let lineno = idx + 1;
                    for (col, tok) in tokens(lines[idx]) {
                        if values.len() == needed {
                            return Err(parse_err(lineno, col, "excess value in weight section"));
                        }
                        let v: f64 = tok.parse().map_err(|_| {
                            parse_err(lineno, col, format!("non-numeric token {tok:?}"))
                        })?;
                        values.push(v);
                    }
                    idx += 1;
                }
                explicit = Some(values);
            }
            "EOF" => break,
            other => {
                return Err(parse_err(lineno, 1, format!("unsupported keyword {other:?}")));
            }
        }
    }

    if !saw_type_tsp {
        return Err(parse_err(1, 1, "missing TYPE: TSP"));
    }
    let n = dimension.ok_or_else(|| parse_err(1, 1, "missing DIMENSION"))?;
    let wt = weight_type
        .as_deref()
        .ok_or_else(|| parse_err(1, 1, "missing EDGE_WEIGHT_TYPE"))?;

    let instance = match wt {
        "EUC_2D" => {
            let pts =
                coords.ok_or_else(|| parse_err(1, 1, "EUC_2D instance without NODE_COORD_SECTION"))?;
            let mut flat = vec![0.0; n * n];
            for i in 0..n {
                for j in (i + 1)..n {
                    let dx = pts[i].0 - pts[j].0;
                    let dy = pts[i].1 - pts[j].1;
                    let d = (dx * dx + dy * dy).sqrt();
                    let d = if exact_euclidean { d } else { nint(d) };
                    flat[i * n + j] = d;
                    flat[j * n + i] = d;
                }
            }
            MetricInstance::from_flat(n, flat)?
        }
        "EXPLICIT" => {
            let values = explicit
                .ok_or_else(|| parse_err(1, 1, "EXPLICIT instance without EDGE_WEIGHT_SECTION"))?;
            let format = weight_format.as_deref().expect("format checked with section");
            let mut flat = vec![0.0; n * n];
            match format {
                "FULL_MATRIX" => {
                    for i in 0..n {
                        for j in 0..n {
                            if i != j {
                                flat[i * n + j] = values[i * n + j];
                            }
                        }
                    }
                }
                "LOWER_DIAG_ROW" => {
                    let mut it = values.into_iter();
                    for i in 0..n {
                        for j in 0..=i {
                            let v = it.next().expect("count checked");
                            if i != j {
                                flat[i * n + j] = v;
                                flat[j * n + i] = v;
                            }
                        }
                    }
                }
                _ => unreachable!(),
            }
            MetricInstance::from_flat(n, flat)?
        }
        _ => unreachable!(),
    };
    Ok(instance)
}

/// Serialize as an EXPLICIT instance. `{}` float formatting round-trips
/// exactly through the parser.
pub fn to_tsplib(instance: &MetricInstance, name: &str, format: ExplicitFormat) -> String {
    let n = instance.n();
    let mut out = String::new();
    out.push_str(&format!("NAME: {name}\n"));
    out.push_str("TYPE: TSP\n");
    out.push_str(&format!("DIMENSION: {n}\n"));
    out.push_str("EDGE_WEIGHT_TYPE: EXPLICIT\n");
    match format {
        ExplicitFormat::FullMatrix => {
            out.push_str("EDGE_WEIGHT_FORMAT: FULL_MATRIX\n");
            out.push_str("EDGE_WEIGHT_SECTION\n");
            for i in 0..n {
                let row: Vec<String> = (0..n)
                    .map(|j| {
                        if i == j {
                            "0".to_string()
                        } else {
                            format!("{}", instance.weight(i, j))
                        }
                    })
                    .collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        ExplicitFormat::LowerDiagRow => {
            out.push_str("EDGE_WEIGHT_FORMAT: LOWER_DIAG_ROW\n");
            out.push_str("EDGE_WEIGHT_SECTION\n");
            for i in 0..n {
                let row: Vec<String> = (0..=i)
                    .map(|j| {
                        if i == j {
                            "0".to_string()
                        } else {
                            format!("{}", instance.weight(i, j))
                        }
                    })
                    .collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
    }
    out.push_str("EOF\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const PYTHAGOREAN: &str = "NAME: pyth3\n\
TYPE: TSP\n\
COMMENT: 3-4-5 right triangle\n\
DIMENSION: 3\n\
EDGE_WEIGHT_TYPE: EUC_2D\n\
NODE_COORD_SECTION\n\
1 0 0\n\
2 0 3\n\
3 4 0\n\
EOF\n";

    #[test]
    fn pythagorean_triple_rounds_exactly() {
        let m = parse_tsplib(PYTHAGOREAN, false).unwrap();
        assert_eq!(m.weight(0, 1), 3.0);
        assert_eq!(m.weight(0, 2), 4.0);
        assert_eq!(m.weight(1, 2), 5.0);
        let exact = parse_tsplib(PYTHAGOREAN, true).unwrap();
        assert_eq!(exact.weight(1, 2), 5.0);
    }

    #[test]
    fn full_matrix_echoes_file_values() {
        let text = "NAME: four\nTYPE: TSP\nDIMENSION: 4\nEDGE_WEIGHT_TYPE: EXPLICIT\n\
EDGE_WEIGHT_FORMAT: FULL_MATRIX\nEDGE_WEIGHT_SECTION\n\
0 2 3 4\n2 0 5 6\n3 5 0 7\n4 6 7 0\nEOF\n";
        let m = parse_tsplib(text, false).unwrap();
        assert_eq!(m.weight(0, 1), 2.0);
        assert_eq!(m.weight(0, 3), 4.0);
        assert_eq!(m.weight(2, 3), 7.0);
    }

    #[test]
    fn lower_diag_row_matches_full_matrix() {
        let full = "TYPE: TSP\nDIMENSION: 4\nEDGE_WEIGHT_TYPE: EXPLICIT\n\
EDGE_WEIGHT_FORMAT: FULL_MATRIX\nEDGE_WEIGHT_SECTION\n\
0 2 3 4\n2 0 5 6\n3 5 0 7\n4 6 7 0\nEOF\n";
        let lower = "TYPE: TSP\nDIMENSION: 4\nEDGE_WEIGHT_TYPE: EXPLICIT\n\
EDGE_WEIGHT_FORMAT: LOWER_DIAG_ROW\nEDGE_WEIGHT_SECTION\n\
0\n2 0\n3 5 0\n4 6 7 0\nEOF\n";
        let a = parse_tsplib(full, false).unwrap();
        let b = parse_tsplib(lower, false).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn writer_round_trips_both_formats() {
        let m = crate::corpus::euclidean_unit_square(6, 12).unwrap();
        for format in [ExplicitFormat::FullMatrix, ExplicitFormat::LowerDiagRow] {
            let text = to_tsplib(&m, "roundtrip", format);
            let back = parse_tsplib(&text, false).unwrap();
            assert_eq!(m, back);
        }
    }

    #[test]
    fn errors_carry_line_and_column() {
        let bad_token = "TYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\n\
EDGE_WEIGHT_FORMAT: FULL_MATRIX\nEDGE_WEIGHT_SECTION\n0 1 2\n1 0 x\n2 3 0\nEOF\n";
        match parse_tsplib(bad_token, false) {
            Err(Error::Parse { line: 7, column: 5, .. }) => {}
            other => panic!("expected parse error at 7:5, got {other:?}"),
        }
        let bad_keyword = "TYPE: TSP\nCAPACITY: 9\n";
        assert!(matches!(
            parse_tsplib(bad_keyword, false),
            Err(Error::Parse { line: 2, .. })
        ));
        let bad_type = "TYPE: ATSP\n";
        assert!(matches!(
            parse_tsplib(bad_type, false),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let short = "TYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\n\
NODE_COORD_SECTION\n1 0 0\n2 0 3\nEOF\n";
        assert!(matches!(parse_tsplib(short, false), Err(Error::Parse { .. })));
    }
}

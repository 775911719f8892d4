//! Text format for covers:
//!
//! ```text
//! degree 3; base_genus 0
//! (0 1)
//! (1 2)
//! ...
//! ```
//!
//! One permutation per line in cycle notation with 0-based sheets. Blank
//! lines and lines starting with `#` are skipped. Cycle entries may be
//! separated by spaces or commas.

use super::{BranchedCover, MonodromyError, Permutation};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> MonodromyError {
    MonodromyError::Parse { line, column, message: message.into() }
}

pub fn parse_cover(text: &str) -> Result<BranchedCover, MonodromyError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let Some((header_no, header)) = lines.next() else {
        return Err(parse_err(1, 1, "missing `degree n; base_genus b` header"));
    };
    let (degree, base_genus) = parse_header(header_no, header)?;

    let mut monodromy = Vec::new();
    for (no, line) in lines {
        monodromy.push(parse_cycles(no, line, degree)?);
    }
    BranchedCover::new(degree, base_genus, monodromy)
}

fn parse_header(no: usize, line: &str) -> Result<(usize, u64), MonodromyError> {
    let mut degree = None;
    let mut base_genus = None;
    let mut offset = 0;
    for part in line.split(';') {
        let col = offset + 1 + (part.len() - part.trim_start().len());
        offset += part.len() + 1;
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, value) = if let Some(rest) = part.strip_prefix("base_genus") {
            ("base_genus", rest)
        } else if let Some(rest) = part.strip_prefix("degree") {
            ("degree", rest)
        } else {
            return Err(parse_err(no, col, format!("unexpected header field `{part}`")));
        };
        let value = value.trim();
        let value_col = col + part.len() - value.len();
        let n: u64 = value
            .parse()
            .map_err(|_| parse_err(no, value_col, format!("expected an integer for `{key}`")))?;
        match key {
            "degree" => degree = Some(n as usize),
            _ => base_genus = Some(n),
        }
    }
    match (degree, base_genus) {
        (Some(d), Some(b)) => Ok((d, b)),
        (None, _) => Err(parse_err(no, 1, "header is missing `degree`")),
        (_, None) => Err(parse_err(no, 1, "header is missing `base_genus`")),
    }
}

/// Parse one permutation in cycle notation, e.g. `(0 1)(2 3)`.
pub fn parse_cycles(line_no: usize, line: &str, degree: usize) -> Result<Permutation, MonodromyError> {
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut current: Option<Vec<u32>> = None;
    let mut chars = line.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let col = i + 1;
        match c {
            '(' => {
                if current.is_some() {
                    return Err(parse_err(line_no, col, "nested `(`"));
                }
                current = Some(Vec::new());
            }
            ')' => {
                let Some(cycle) = current.take() else {
                    return Err(parse_err(line_no, col, "unmatched `)`"));
                };
                cycles.push(cycle);
            }
            c if c.is_whitespace() || c == ',' => {}
            c if c.is_ascii_digit() => {
                let Some(cycle) = current.as_mut() else {
                    return Err(parse_err(line_no, col, "sheet index outside a cycle"));
                };
                let mut end = i + 1;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                let x: u32 = line[i..end]
                    .parse()
                    .map_err(|_| parse_err(line_no, col, "sheet index too large"))?;
                if x as usize >= degree {
                    return Err(parse_err(
                        line_no,
                        col,
                        format!("sheet {x} out of range for degree {degree}"),
                    ));
                }
                if cycle.contains(&x) || cycles.iter().any(|c| c.contains(&x)) {
                    return Err(parse_err(line_no, col, format!("sheet {x} repeated")));
                }
                cycle.push(x);
            }
            other => return Err(parse_err(line_no, col, format!("unexpected character `{other}`"))),
        }
    }
    if current.is_some() {
        return Err(parse_err(line_no, line.len() + 1, "unterminated cycle"));
    }
    Permutation::from_cycles(degree, &cycles)
}

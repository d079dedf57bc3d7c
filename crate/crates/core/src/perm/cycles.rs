use super::Permutation;
use crate::error::{Error, Result};

/// Parses disjoint cycle notation such as `"(1 2 3)(4 5)"` or `"()"`.
///
/// Points are separated by whitespace or commas; whitespace between cycles is
/// ignored. Points fixed by the text stay fixed.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let malformed = |reason: &str| Error::Parse { text: text.to_string(), reason: reason.to_string() };

    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(malformed("empty input"));
    }

    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(malformed("expected '('"));
        };
        let Some(close) = body.find(')') else {
            return Err(malformed("unclosed cycle"));
        };
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(malformed("nested '('"));
        }
        rest = body[close + 1..].trim_start();

        let mut points = Vec::new();
        for token in inner.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let point: u32 = token.parse().map_err(|_| malformed(&format!("bad point {token:?}")))?;
            if point == 0 {
                return Err(malformed("points are numbered from 1"));
            }
            if point as usize > degree {
                return Err(Error::PointOutOfRange { point, degree });
            }
            let idx = (point - 1) as usize;
            if used[idx] {
                return Err(Error::RepeatedPoint { text: text.to_string(), point });
            }
            used[idx] = true;
            points.push(point - 1);
        }
        for (i, &pt) in points.iter().enumerate() {
            images[pt as usize] = points[(i + 1) % points.len()];
        }
    }
    Ok(Permutation::from_raw(images))
}

/// Disjoint cycle notation with 1-based points, omitting fixed points.
/// The identity is written `()`.
pub fn format_cycles(perm: &Permutation) -> String {
    let n = perm.degree();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || perm.image0(start) == start {
            continue;
        }
        out.push('(');
        let mut p = start;
        let mut first = true;
        while !seen[p] {
            seen[p] = true;
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&(p + 1).to_string());
            p = perm.image0(p);
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cycle() {
        assert_eq!(parse_cycles("(1 2 3)", 5).unwrap().images(), vec![2, 3, 1, 4, 5]);
    }

    #[test]
    fn identity() {
        assert!(parse_cycles("()", 4).unwrap().is_identity());
        assert_eq!(parse_cycles("()", 4).unwrap().degree(), 4);
    }

    #[test]
    fn two_transpositions() {
        assert_eq!(parse_cycles("(1 2)(3 4)", 5).unwrap().images(), vec![2, 1, 4, 3, 5]);
    }

    #[test]
    fn whitespace_and_commas_tolerated() {
        let a = parse_cycles("  ( 1  2 3 ) (4,5) ", 5).unwrap();
        assert_eq!(a, parse_cycles("(1 2 3)(4 5)", 5).unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_cycles("(1 2", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_cycles("1 2)", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_cycles("(1 x)", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_cycles("", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_cycles("(0 1)", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_cycles("((1 2))", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_cycles("(1 2)(2 3)", 3), Err(Error::RepeatedPoint { point: 2, .. })));
        assert!(matches!(parse_cycles("(1 1)", 3), Err(Error::RepeatedPoint { point: 1, .. })));
        assert!(matches!(parse_cycles("(1 4)", 3), Err(Error::PointOutOfRange { point: 4, degree: 3 })));
    }

    #[test]
    fn format_round_trips() {
        for text in ["()", "(1 2 3)(4 5)", "(2 5)", "(1 3 2)"] {
            let a = parse_cycles(text, 6).unwrap();
            assert_eq!(format_cycles(&a), text);
        }
    }
}

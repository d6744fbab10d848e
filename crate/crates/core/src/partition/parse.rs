use thiserror::Error;

use super::{Composition, Partition};

/// A rejected partition or composition literal. `position` is a byte offset
/// into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err(position: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        position,
        message: message.into(),
    }
}

/// Splits `[a,b,c]` into `(offset, token)` pairs.
fn tokens(text: &str) -> Result<Vec<(usize, &str)>, ParseError> {
    let lead = text.len() - text.trim_start().len();
    let trimmed = text.trim();
    if !trimmed.starts_with('[') {
        return Err(err(lead, "expected '['"));
    }
    if !trimmed.ends_with(']') || trimmed.len() < 2 {
        return Err(err(lead + trimmed.len(), "expected ']'"));
    }
    let inner = &trimmed[1..trimmed.len() - 1];
    let base = lead + 1;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = base;
    for piece in inner.split(',') {
        let skip = piece.len() - piece.trim_start().len();
        let token = piece.trim();
        if token.is_empty() {
            return Err(err(offset + skip, "empty entry"));
        }
        out.push((offset + skip, token));
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Parses `[4,2,1,1]` (or `[]` for the empty partition). Parts must be
/// positive and weakly decreasing.
pub fn parse_partition(text: &str) -> Result<Partition, ParseError> {
    let mut parts: Vec<usize> = Vec::new();
    for (pos, token) in tokens(text)? {
        let value: i64 = token
            .parse()
            .map_err(|_| err(pos, format!("'{token}' is not an integer")))?;
        if value <= 0 {
            return Err(err(pos, "parts must be positive"));
        }
        let value = value as usize;
        if let Some(&prev) = parts.last() {
            if value > prev {
                return Err(err(pos, "parts are not weakly decreasing"));
            }
        }
        parts.push(value);
    }
    Ok(Partition { parts })
}

/// Parses an arbitrary integer sequence such as `[0,3,-1]`.
pub fn parse_composition(text: &str) -> Result<Composition, ParseError> {
    let mut entries = Vec::new();
    for (pos, token) in tokens(text)? {
        entries.push(
            token
                .parse::<i64>()
                .map_err(|_| err(pos, format!("'{token}' is not an integer")))?,
        );
    }
    Ok(Composition { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn accepts_literals() {
        assert_eq!(
            parse_partition("[4,2,1,1]").unwrap(),
            partition![4, 2, 1, 1]
        );
        assert_eq!(parse_partition("[]").unwrap(), Partition::empty());
        assert_eq!(parse_partition(" [3, 3] ").unwrap(), partition![3, 3]);
    }

    #[test]
    fn rejects_bad_input() {
        let e = parse_partition("[1,2]").unwrap_err();
        assert_eq!(e.position, 3);
        assert!(e.message.contains("weakly decreasing"));
        assert!(parse_partition("[2,0]")
            .unwrap_err()
            .message
            .contains("positive"));
        assert!(parse_partition("[2,-1]").is_err());
        assert_eq!(parse_partition("2,1").unwrap_err().position, 0);
        assert!(parse_partition("[2,1").is_err());
        assert!(parse_partition("[2,,1]").is_err());
        assert!(parse_partition("[a]").is_err());
    }

    #[test]
    fn compositions_allow_any_sign() {
        assert_eq!(
            parse_composition("[0,3,-1]").unwrap().entries(),
            &[0, 3, -1]
        );
        assert!(parse_composition("[]").unwrap().is_empty());
    }
}

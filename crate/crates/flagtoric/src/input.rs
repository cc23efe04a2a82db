//! Parsers for the textual arguments: shapes, degree lists, functionals.

use std::fmt;

use flagtoric_core::FlagShape;

/// A syntax error at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at position {} in {:?}",
            self.message, self.position, self.input
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeError {
    Parse(ParseError),
    Invalid(flagtoric_core::Error),
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeError::Parse(e) => e.fmt(f),
            ShapeError::Invalid(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for ShapeError {}

fn err(input: &str, position: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        input: input.to_string(),
        position,
        message: message.into(),
    }
}

/// Splits `text[start..end]` on `sep`, yielding each piece with its offset.
fn pieces(text: &str, start: usize, end: usize, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut at = start;
    for part in text[start..end].split(sep) {
        out.push((at, part));
        at += part.len() + sep.len_utf8();
    }
    out
}

fn number<T: std::str::FromStr>(input: &str, at: usize, tok: &str) -> Result<T, ParseError> {
    let lead = tok.len() - tok.trim_start().len();
    let body = tok.trim();
    if body.is_empty() {
        return Err(err(input, at + lead, "expected a number"));
    }
    let signed = body.strip_prefix('-').unwrap_or(body);
    if let Some(k) = signed.find(|c: char| !c.is_ascii_digit()) {
        return Err(err(
            input,
            at + lead + (body.len() - signed.len()) + k,
            "unexpected character",
        ));
    }
    body.parse()
        .map_err(|_| err(input, at + lead, "number out of range"))
}

/// Parses `"n1,n2,.../n"`, e.g. `"1,2,4/5"`.
pub fn parse_shape(text: &str) -> Result<FlagShape, ShapeError> {
    let slash = text
        .find('/')
        .ok_or_else(|| ShapeError::Parse(err(text, text.len(), "expected '/'")))?;
    let mut steps = Vec::new();
    for (at, tok) in pieces(text, 0, slash, ',') {
        steps.push(number::<usize>(text, at, tok).map_err(ShapeError::Parse)?);
    }
    let ambient =
        number::<usize>(text, slash + 1, &text[slash + 1..]).map_err(ShapeError::Parse)?;
    FlagShape::new(&steps, ambient).map_err(ShapeError::Invalid)
}

fn nested<T: std::str::FromStr>(text: &str) -> Result<Vec<Vec<T>>, ParseError> {
    if text.trim().is_empty() {
        return Err(err(text, 0, "empty list"));
    }
    pieces(text, 0, text.len(), ';')
        .into_iter()
        .map(|(at, group)| {
            pieces(text, at, at + group.len(), ',')
                .into_iter()
                .map(|(a, tok)| number(text, a, tok))
                .collect()
        })
        .collect()
}

/// Parses `"a,b;c,d"` into one degree vector per hypersurface.
pub fn parse_degrees(text: &str) -> Result<Vec<Vec<u32>>, ParseError> {
    nested(text)
}

/// Parses a roof assignment `"0,0,1;1,1"`: one list per roof giving the
/// equation index of each of its edges.
pub fn parse_assignment(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    nested(text)
}

/// Parses a comma-separated integer vector.
pub fn parse_vector(text: &str) -> Result<Vec<i64>, ParseError> {
    pieces(text, 0, text.len(), ',')
        .into_iter()
        .map(|(a, tok)| number(text, a, tok))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(parse_shape("2/5").unwrap().to_string(), "F(2,5)");
        assert_eq!(parse_shape("1,2,3/4").unwrap().to_string(), "F(1,2,3,4)");
        assert!(matches!(parse_shape("3,2/5"), Err(ShapeError::Invalid(_))));
    }

    #[test]
    fn positions() {
        let pos = |t: &str| match parse_shape(t) {
            Err(ShapeError::Parse(e)) => e.position,
            other => panic!("{other:?}"),
        };
        assert_eq!(pos("1,2"), 3);
        assert_eq!(pos("1,x/4"), 2);
        assert_eq!(pos("1,,2/4"), 2);
        assert_eq!(pos("1,2/"), 4);
        assert_eq!(pos("12a/5"), 2);
    }

    #[test]
    fn degree_lists() {
        assert_eq!(
            parse_degrees("1,0;1,2").unwrap(),
            vec![vec![1, 0], vec![1, 2]]
        );
        assert_eq!(parse_degrees("4").unwrap(), vec![vec![4]]);
        assert_eq!(parse_degrees("1,0;1,z").unwrap_err().position, 6);
        assert_eq!(parse_vector("1,-2,0").unwrap(), vec![1, -2, 0]);
    }
}

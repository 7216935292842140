//! Polynomial system files.
//!
//! ```text
//! p 65521          # modulus, optional (defaults to 65521)
//! vars x, y, z
//! x*y - 1
//! x*z
//! ```
//!
//! `#` starts a comment. Blank lines are ignored. Each remaining line after
//! the header holds one polynomial.

use std::sync::Arc;

use equidim::arith::{VariableContext, MAX_VARS};
use equidim::{MonomialOrder, ParseError, PolyRing, Polynomial, PrimeField};

pub const DEFAULT_MODULUS: u32 = 65521;

#[derive(Clone, Debug)]
pub struct SystemFile {
    pub ring: Arc<PolyRing>,
    pub polynomials: Vec<Polynomial>,
}

impl SystemFile {
    pub fn modulus(&self) -> u32 {
        self.ring.field().modulus()
    }

    pub fn variables(&self) -> &[String] {
        self.ring.var_names()
    }
}

/// Significant part of a line: comment stripped, with the 1-based column
/// of its first non-blank character.
fn content(line: &str) -> Option<(&str, usize)> {
    let code = line.split('#').next().unwrap_or("");
    let trimmed = code.trim_start();
    if trimmed.trim().is_empty() {
        return None;
    }
    let col = code[..code.len() - trimmed.len()].chars().count() + 1;
    Some((trimmed.trim_end(), col))
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_system(text: &str) -> Result<SystemFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter_map(|(i, l)| content(l).map(|(s, c)| (i + 1, s, c)));

    let Some(mut header) = lines.next() else {
        return Err(err(1, 1, "expected `p <prime>` or `vars <names>`"));
    };

    let mut modulus = DEFAULT_MODULUS as u64;
    let mut modulus_pos = (header.0, header.2);
    if let Some(rest) = keyword(header.1, "p") {
        let (line, _, col) = header;
        let value_col = col + header.1.len() - rest.len();
        let value = rest.trim();
        modulus_pos = (line, value_col + rest.len() - rest.trim_start().len());
        modulus = value.parse::<u64>().map_err(|_| {
            err(
                modulus_pos.0,
                modulus_pos.1,
                format!("invalid modulus `{value}`"),
            )
        })?;
        header = lines
            .next()
            .ok_or_else(|| err(line + 1, 1, "expected `vars <names>`"))?;
    }
    let field =
        PrimeField::new(modulus).map_err(|e| err(modulus_pos.0, modulus_pos.1, e.to_string()))?;

    let (vline, vtext, vcol) = header;
    let Some(rest) = keyword(vtext, "vars") else {
        return Err(err(vline, vcol, "expected `vars <names>`"));
    };
    let names: Vec<&str> = rest.split(',').map(str::trim).collect();
    if names.iter().any(|n| n.is_empty()) {
        return Err(err(vline, vcol, "empty variable name in `vars`"));
    }
    if names.len() >= MAX_VARS {
        // one slot stays free for the auxiliary saturation variable
        return Err(err(
            vline,
            vcol,
            format!("at most {} variables are supported", MAX_VARS - 1),
        ));
    }
    let vars =
        VariableContext::new(names.iter().copied()).map_err(|e| err(vline, vcol, e.to_string()))?;
    let ring = PolyRing::new(field, vars, MonomialOrder::DegRevLex);

    let polynomials = lines
        .map(|(line, s, col)| Polynomial::parse_at(&ring, s, line, col))
        .collect::<Result<Vec<_>, _>>()?;
    if polynomials.is_empty() {
        return Err(err(vline + 1, 1, "expected at least one polynomial"));
    }
    Ok(SystemFile { ring, polynomials })
}

/// The rest of `line` if it starts with `word` followed by whitespace.
fn keyword<'a>(line: &'a str, word: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(word)?;
    rest.starts_with(char::is_whitespace).then_some(rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_system() {
        let s =
            parse_system("p 65521\nvars x, y,z\n# comment\nx*y - 1  # trailing\n\nx*z\n").unwrap();
        assert_eq!(s.modulus(), 65521);
        assert_eq!(s.variables(), ["x", "y", "z"]);
        assert_eq!(s.polynomials.len(), 2);
        assert_eq!(s.polynomials[0].to_string(), "x*y - 1");
    }

    #[test]
    fn modulus_defaults() {
        let s = parse_system("vars a\na^2").unwrap();
        assert_eq!(s.modulus(), DEFAULT_MODULUS);
    }

    #[test]
    fn rejects_composite_modulus() {
        let e = parse_system("p 15\nvars x\nx").unwrap_err();
        assert!(e.message.contains("not prime"), "{e}");
        assert_eq!((e.line, e.column), (1, 3));
    }

    #[test]
    fn positions_unknown_variables() {
        let e = parse_system("p 7\nvars x,y\nx + y\n  x*w\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 5));
        assert!(e.message.contains("`w`"));
    }

    #[test]
    fn header_errors() {
        assert!(parse_system("").is_err());
        assert!(parse_system("p 7\n").is_err());
        assert!(parse_system("p x\nvars x\nx").is_err());
        assert!(parse_system("p 7\nvariables x\nx").is_err());
        assert!(parse_system("p 7\nvars x,,y\nx").is_err());
        assert!(parse_system("p 7\nvars x,x\nx").is_err());
        assert!(parse_system("p 7\nvars x").is_err());
        let many: Vec<String> = (0..MAX_VARS).map(|i| format!("v{i}")).collect();
        assert!(parse_system(&format!("vars {}\nv0", many.join(","))).is_err());
    }
}

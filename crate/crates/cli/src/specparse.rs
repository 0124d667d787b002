//! Function-spec parsing. Three input forms:
//!
//! - `b:0001`: binary truth table, entry i = f(b(i)), length 2^n;
//! - `h:6a13`: hex truth table, each digit packs four consecutive entries,
//!   first entry in the digit's most significant bit;
//! - `a:n=4: x1*x2 + x3*x4`: algebraic normal form with variables x1..xn,
//!   `*` for AND, `+` for XOR, constant `1` allowed.
//!
//! All positions in error messages are byte offsets into the full spec
//! string.

use bentgraph::BooleanFunction;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub position: Option<usize>,
}

impl ParseError {
    fn at(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
            position: Some(position),
        }
    }

    fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
            position: None,
        }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.position {
            Some(p) => write!(f, "{} (at position {p})", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

fn arity_for_table_len(len: usize, what: &str) -> Result<usize, ParseError> {
    if len >= 2 && len.is_power_of_two() {
        Ok(len.trailing_zeros() as usize)
    } else {
        Err(ParseError::new(format!(
            "{what} of length {len} is not a valid truth table; valid lengths are powers of two: 2, 4, 8, 16, ..."
        )))
    }
}

pub fn parse_function(spec: &str) -> Result<BooleanFunction, ParseError> {
    if let Some(bits) = spec.strip_prefix("b:") {
        return parse_binary(bits, 2);
    }
    if let Some(hex) = spec.strip_prefix("h:") {
        return parse_hex(hex, 2);
    }
    if let Some(rest) = spec.strip_prefix("a:") {
        return parse_anf(rest, 2);
    }
    Err(ParseError::new(
        "unknown function spec; expected one of b:<bits>, h:<hex>, a:n=<arity>: <anf>",
    ))
}

fn parse_binary(bits: &str, offset: usize) -> Result<BooleanFunction, ParseError> {
    let mut table = Vec::with_capacity(bits.len());
    for (i, c) in bits.char_indices() {
        match c {
            '0' => table.push(0),
            '1' => table.push(1),
            other => {
                return Err(ParseError::at(
                    offset + i,
                    format!("expected 0 or 1, found {other:?}"),
                ))
            }
        }
    }
    let n = arity_for_table_len(table.len(), "binary table")?;
    BooleanFunction::from_truth_table(n, &table).map_err(|e| ParseError::new(e.to_string()))
}

fn parse_hex(hex: &str, offset: usize) -> Result<BooleanFunction, ParseError> {
    let mut table = Vec::with_capacity(hex.len() * 4);
    for (i, c) in hex.char_indices() {
        let Some(digit) = c.to_digit(16) else {
            return Err(ParseError::at(
                offset + i,
                format!("expected a hex digit, found {c:?}"),
            ));
        };
        for bit in (0..4).rev() {
            table.push((digit >> bit & 1) as u8);
        }
    }
    let n = arity_for_table_len(table.len(), "hex table")?;
    BooleanFunction::from_truth_table(n, &table).map_err(|e| ParseError::new(e.to_string()))
}

/// One parsed ANF monomial: the AND of the variables in `mask` (encoded in
/// the repo bit order, x1 = most significant bit), with mask 0 the constant 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monomial(pub usize);

/// A parsed ANF expression: XOR of monomials over n variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anf {
    pub n: usize,
    pub monomials: Vec<Monomial>,
}

impl Anf {
    pub fn evaluate(&self, point: usize) -> bool {
        self.monomials
            .iter()
            .fold(false, |acc, &Monomial(mask)| acc ^ (point & mask == mask))
    }

    pub fn to_function(&self) -> Result<BooleanFunction, ParseError> {
        BooleanFunction::from_fn(self.n, |x| self.evaluate(x))
            .map_err(|e| ParseError::new(e.to_string()))
    }
}

fn parse_anf(rest: &str, offset: usize) -> Result<BooleanFunction, ParseError> {
    parse_anf_expression(rest, offset).and_then(|anf| anf.to_function())
}

/// Parses `n=<arity>: <expr>` where expr is terms joined by `+`, each term
/// factors joined by `*`, each factor `x<index>` or `1`.
pub fn parse_anf_expression(rest: &str, offset: usize) -> Result<Anf, ParseError> {
    let bytes = rest.as_bytes();
    let mut pos = 0usize;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    skip_ws(&mut pos);
    if !rest[pos..].starts_with("n=") {
        return Err(ParseError::at(offset + pos, "expected n=<arity> after a:"));
    }
    pos += 2;
    let digits_start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == digits_start {
        return Err(ParseError::at(offset + pos, "expected an arity after n="));
    }
    let n: usize = rest[digits_start..pos]
        .parse()
        .map_err(|_| ParseError::at(offset + digits_start, "arity does not fit"))?;
    if n < 1 {
        return Err(ParseError::at(
            offset + digits_start,
            "arity must be at least 1",
        ));
    }
    skip_ws(&mut pos);
    if pos >= bytes.len() || bytes[pos] != b':' {
        return Err(ParseError::at(offset + pos, "expected ':' after the arity"));
    }
    pos += 1;

    let mut monomials = Vec::new();
    loop {
        // One term: factors joined by '*'.
        let mut mask = 0usize;
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                return Err(ParseError::at(
                    offset + pos,
                    "expected a factor (x<i> or 1)",
                ));
            }
            match bytes[pos] {
                b'1' => {
                    pos += 1;
                    // Constant factor: identity for AND, mask unchanged.
                }
                b'x' => {
                    pos += 1;
                    let idx_start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if pos == idx_start {
                        return Err(ParseError::at(
                            offset + pos,
                            "expected a variable index after x",
                        ));
                    }
                    let j: usize = rest[idx_start..pos].parse().map_err(|_| {
                        ParseError::at(offset + idx_start, "variable index does not fit")
                    })?;
                    if j < 1 || j > n {
                        return Err(ParseError::at(
                            offset + idx_start,
                            format!("variable x{j} outside x1..x{n}"),
                        ));
                    }
                    mask |= 1 << (n - j);
                }
                other => {
                    return Err(ParseError::at(
                        offset + pos,
                        format!("expected a factor (x<i> or 1), found {:?}", other as char),
                    ));
                }
            }
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                continue;
            }
            break;
        }
        monomials.push(Monomial(mask));
        skip_ws(&mut pos);
        if pos < bytes.len() && bytes[pos] == b'+' {
            pos += 1;
            continue;
        }
        break;
    }
    skip_ws(&mut pos);
    if pos < bytes.len() {
        return Err(ParseError::at(
            offset + pos,
            format!("unexpected trailing input {:?}", &rest[pos..]),
        ));
    }
    Ok(Anf { n, monomials })
}

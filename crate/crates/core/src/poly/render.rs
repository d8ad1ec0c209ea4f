use num_traits::{One, Signed};

use super::rational::{fmt_rational, Rational};

/// One signed term `±c*var` of a rendered sum.
pub(crate) struct Term {
    pub negative: bool,
    abs: Rational,
    var: String,
}

impl Term {
    pub fn new(c: &Rational, var: String) -> Self {
        Term {
            negative: c.is_negative(),
            abs: c.abs(),
            var,
        }
    }

    /// The term without its sign; unit coefficients are dropped.
    pub fn body(&self) -> String {
        if self.var.is_empty() {
            fmt_rational(&self.abs)
        } else if self.abs.is_one() {
            self.var.clone()
        } else {
            format!("{}*{}", fmt_rational(&self.abs), self.var)
        }
    }
}

/// `a - b + c`; the empty sum is `0`.
pub(crate) fn join_signed(terms: impl IntoIterator<Item = Term>) -> String {
    let mut out = String::new();
    for term in terms {
        let body = term.body();
        match (out.is_empty(), term.negative) {
            (true, false) => out.push_str(&body),
            (true, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Joins pre-signed pieces `(negative, body)`.
pub(crate) fn join_pieces(pieces: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (negative, body) in pieces {
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

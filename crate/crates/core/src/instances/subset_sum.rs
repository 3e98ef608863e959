use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Positive item values and a nonnegative target.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubsetSumInstance {
    items: Vec<BigUint>,
    target: BigUint,
}

impl SubsetSumInstance {
    pub fn new(items: Vec<BigUint>, target: BigUint) -> Result<Self> {
        if let Some(i) = items.iter().position(Zero::is_zero) {
            return Err(Error::param(format!("item {i} is zero; items must be positive")));
        }
        Ok(SubsetSumInstance { items, target })
    }

    pub fn from_u64(items: &[u64], target: u64) -> Result<Self> {
        Self::new(items.iter().map(|&a| BigUint::from(a)).collect(), target.into())
    }

    pub fn items(&self) -> &[BigUint] {
        &self.items
    }

    pub fn target(&self) -> &BigUint {
        &self.target
    }

    /// Number of bits of the target.
    pub fn bit_length(&self) -> u64 {
        self.target.bits()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut items = Vec::new();
        let mut target = None;
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if target.is_some() {
                return Err(Error::parse(line_no, "content after the target line"));
            }
            if let Some(rest) = line.strip_prefix('t') {
                target = Some(parse_big(rest.trim(), line_no)?);
                continue;
            }
            let a = parse_big(line, line_no)?;
            if a.is_zero() {
                return Err(Error::parse(line_no, "items must be positive"));
            }
            items.push(a);
        }
        let target =
            target.ok_or_else(|| Error::parse(last_line.max(1), "missing `t <target>` line"))?;
        Self::new(items, target)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for a in &self.items {
            out.push_str(&a.to_str_radix(10));
            out.push('\n');
        }
        out.push_str(&format!("t {}\n", self.target));
        out
    }
}

fn parse_big(tok: &str, line: usize) -> Result<BigUint> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(line, format!("expected a decimal integer, got `{tok}`")));
    }
    BigUint::parse_bytes(tok.as_bytes(), 10)
        .ok_or_else(|| Error::parse(line, format!("bad integer `{tok}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_format() {
        let s = SubsetSumInstance::from_u64(&[3, 5], 8).unwrap();
        assert_eq!(s.to_text(), "3\n5\nt 8\n");
        assert_eq!(SubsetSumInstance::parse("3\n5\nt 8\n").unwrap(), s);
        assert_eq!(s.bit_length(), 4);
    }

    #[test]
    fn big_values_and_errors() {
        let text = "123456789012345678901234567890\nt 0\n";
        let s = SubsetSumInstance::parse(text).unwrap();
        assert_eq!(s.to_text(), text);
        assert_eq!(s.bit_length(), 0);
        assert!(matches!(
            SubsetSumInstance::parse("3\n0\nt 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(SubsetSumInstance::parse("3\n").is_err());
        assert!(matches!(
            SubsetSumInstance::parse("3\nt 3\n4\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(SubsetSumInstance::parse("-3\nt 3\n").is_err());
    }
}

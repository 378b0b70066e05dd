use std::collections::BTreeMap;

/// What a structural figure comparison looks at: element counts by tag,
/// point labels in order, and every number in document order.
#[derive(Clone, Debug, PartialEq)]
pub struct SvgStructure {
    pub tags: BTreeMap<String, usize>,
    pub labels: Vec<String>,
    pub numbers: Vec<f64>,
}

/// Numbers may differ by this much and still match.
pub const STRUCTURE_NUMBER_TOL: f64 = 1e-6;

impl SvgStructure {
    pub fn parse(svg: &str) -> Self {
        let mut tags = BTreeMap::new();
        for (i, _) in svg.match_indices('<') {
            let name: String = svg[i + 1..].chars().take_while(|c| c.is_ascii_alphanumeric()).collect();
            if !name.is_empty() {
                *tags.entry(name).or_insert(0) += 1;
            }
        }
        let marker = r#"class="label""#;
        let labels = svg
            .match_indices(marker)
            .filter_map(|(i, _)| {
                let rest = &svg[i..];
                let start = rest.find('>')? + 1;
                let end = rest[start..].find('<')?;
                Some(rest[start..start + end].to_string())
            })
            .collect();
        Self {
            tags,
            labels,
            numbers: scan_numbers(svg),
        }
    }

    pub fn matches(&self, other: &Self) -> bool {
        self.tags == other.tags
            && self.labels == other.labels
            && self.numbers.len() == other.numbers.len()
            && self
                .numbers
                .iter()
                .zip(&other.numbers)
                .all(|(x, y)| (x - y).abs() <= STRUCTURE_NUMBER_TOL)
    }
}

fn scan_numbers(text: &str) -> Vec<f64> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let neg = bytes[i] == b'-' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit);
        if bytes[i].is_ascii_digit() || neg {
            let start = i;
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < bytes.len() && bytes[i] == b'.' && bytes[i + 1].is_ascii_digit() {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            out.push(text[start..i].parse().expect("digits"));
        } else {
            i += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_counts_labels_numbers() {
        let svg = r#"<svg><path d="M1.5 -2 L3 4"/><text class="label" x="1">A′=B</text></svg>"#;
        let s = SvgStructure::parse(svg);
        assert_eq!(s.tags["path"], 1);
        assert_eq!(s.tags["svg"], 1);
        assert_eq!(s.labels, ["A′=B"]);
        assert_eq!(s.numbers, [1.5, -2.0, 3.0, 4.0, 1.0]);
    }

    #[test]
    fn tolerance() {
        let a = SvgStructure::parse(r#"<path d="M1.0000001 2"/>"#);
        let b = SvgStructure::parse(r#"<path d="M1 2"/>"#);
        let c = SvgStructure::parse(r#"<path d="M1.001 2"/>"#);
        assert!(a.matches(&b));
        assert!(!a.matches(&c));
    }
}

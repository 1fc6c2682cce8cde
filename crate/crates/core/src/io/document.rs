use std::fmt;
use std::str::FromStr;

use super::IoError;

/// What a document describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocKind {
    Graph,
    Groupoid,
    CrossedProduct,
    CornerSkew,
    HTriple,
    RealizationJob,
}

impl DocKind {
    pub const ALL: [DocKind; 6] = [
        DocKind::Graph,
        DocKind::Groupoid,
        DocKind::CrossedProduct,
        DocKind::CornerSkew,
        DocKind::HTriple,
        DocKind::RealizationJob,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DocKind::Graph => "graph",
            DocKind::Groupoid => "groupoid",
            DocKind::CrossedProduct => "crossed-product",
            DocKind::CornerSkew => "corner-skew",
            DocKind::HTriple => "htriple",
            DocKind::RealizationJob => "realization-job",
        }
    }
}

impl fmt::Display for DocKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DocKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        DocKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown kind `{s}`"))
    }
}

/// `[name]` followed by `key = value` lines, in file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub entries: Vec<(String, String)>,
}

impl Section {
    pub fn new(name: impl Into<String>) -> Self {
        Section {
            name: name.into(),
            entries: Vec::new(),
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.entries.push((key.into(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn require(&self, key: &str) -> Result<&str, IoError> {
        self.get(key).ok_or_else(|| IoError::Missing {
            section: self.name.clone(),
            key: key.into(),
        })
    }
}

/// A parsed input file: a `kind = ...` header and named sections.
///
/// Sections and keys are unique; comments and blank lines are not kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub kind: DocKind,
    pub sections: Vec<Section>,
}

impl Document {
    pub fn new(kind: DocKind) -> Self {
        Document {
            kind,
            sections: Vec::new(),
        }
    }

    pub fn with(mut self, section: Section) -> Self {
        self.sections.push(section);
        self
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn require(&self, name: &str) -> Result<&Section, IoError> {
        self.section(name).ok_or_else(|| IoError::Missing {
            section: name.into(),
            key: String::new(),
        })
    }

    pub fn parse(text: &str) -> Result<Self, IoError> {
        let syntax = |line: usize, column: usize, message: &str| IoError::Syntax {
            line,
            column,
            message: message.into(),
        };
        let mut kind = None;
        let mut sections: Vec<Section> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let indent = raw.len() - raw.trim_start().len();
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let column = indent + 1;
            if let Some(rest) = body.strip_prefix('[') {
                let name = rest
                    .strip_suffix(']')
                    .ok_or_else(|| syntax(line, column + body.len(), "expected `]`"))?
                    .trim();
                if kind.is_none() {
                    return Err(syntax(line, column, "expected `kind = ...` before the first section"));
                }
                if name.is_empty() || name.contains(['[', ']']) {
                    return Err(syntax(line, column + 1, "bad section name"));
                }
                if sections.iter().any(|s| s.name == name) {
                    return Err(syntax(line, column + 1, "duplicate section"));
                }
                sections.push(Section::new(name));
                continue;
            }
            let Some(eq) = body.find(" = ").or_else(|| body.strip_suffix(" =").map(|b| b.len())) else {
                return Err(syntax(line, column, "expected `key = value`"));
            };
            let key = body[..eq].trim();
            let value = body[eq..].trim_start_matches([' ', '=']).trim();
            if key.is_empty() {
                return Err(syntax(line, column, "empty key"));
            }
            match (&kind, sections.last_mut()) {
                (None, _) => {
                    if key != "kind" {
                        return Err(syntax(line, column, "the first entry must be `kind`"));
                    }
                    kind = Some(
                        value
                            .parse::<DocKind>()
                            .map_err(|m| syntax(line, column + eq + 3, &m))?,
                    );
                }
                (Some(_), None) => return Err(syntax(line, column, "entry outside a section")),
                (Some(_), Some(section)) => {
                    if section.get(key).is_some() {
                        return Err(syntax(line, column, &format!("duplicate key `{key}`")));
                    }
                    section.entries.push((key.into(), value.into()));
                }
            }
        }
        let kind = kind.ok_or(IoError::EmptyDocument)?;
        Ok(Document { kind, sections })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("kind = {}\n", self.kind);
        for s in &self.sections {
            out.push_str(&format!("\n[{}]\n", s.name));
            for (k, v) in &s.entries {
                if v.is_empty() {
                    out.push_str(&format!("{k} =\n"));
                } else {
                    out.push_str(&format!("{k} = {v}\n"));
                }
            }
        }
        out
    }
}

/// Splits a `;`-separated list, dropping empty items.
pub fn list(value: &str) -> Vec<&str> {
    value.split(';').map(str::trim).filter(|s| !s.is_empty()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "# a graph\nkind = graph\n\n[graph]\nvertices = u; v\n[range]\ne = u\n  [source]\ne = v\n";

    #[test]
    fn parses_sections_in_order() {
        let d = Document::parse(SAMPLE).unwrap();
        assert_eq!(d.kind, DocKind::Graph);
        let names: Vec<&str> = d.sections.iter().map(|s| s.name.as_str()).collect();
        assert_eq!(names, ["graph", "range", "source"]);
        assert_eq!(list(d.section("graph").unwrap().get("vertices").unwrap()), ["u", "v"]);
    }

    #[test]
    fn serialize_then_parse_is_identity() {
        let d = Document::parse(SAMPLE).unwrap();
        let text = d.serialize();
        assert_eq!(Document::parse(&text).unwrap(), d);
        assert_eq!(Document::parse(&text).unwrap().serialize(), text);
    }

    #[test]
    fn empty_document_is_rejected() {
        assert!(matches!(Document::parse(""), Err(IoError::EmptyDocument)));
        assert!(matches!(Document::parse("# only\n\n"), Err(IoError::EmptyDocument)));
    }

    #[test]
    fn errors_carry_positions() {
        let err = Document::parse("kind = graph\n[graph]\n   vertices u\n").unwrap_err();
        assert!(matches!(err, IoError::Syntax { line: 3, column: 4, .. }), "{err}");
        let err = Document::parse("kind = lattice\n").unwrap_err();
        assert!(matches!(err, IoError::Syntax { line: 1, column: 8, .. }), "{err}");
        let err = Document::parse("kind = graph\ne = u\n").unwrap_err();
        assert!(matches!(err, IoError::Syntax { line: 2, .. }));
    }
}

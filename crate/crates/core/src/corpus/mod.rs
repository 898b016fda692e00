//! Canonical data model for page corpora and NER data: entity types,
//! pages, tokens, tagged sentences, link records, and their file formats.

mod bio;
mod conll;
mod links;
mod pages;

pub use bio::{bio_from_spans, spans_from_bio, Span, Tag};
pub use conll::{
    conll_to_string, load_conll, load_conll_tokens, parse_conll, parse_conll_tokens, save_conll,
    BioMode, ConllFile, TaggedSentence,
};
pub use links::{load_link_records, parse_link_records, LinkRecord};
pub use pages::{load_page_corpus, pages_to_string, parse_page_corpus, save_page_corpus};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reserved label assigned to non-entity pages and pages describing
/// common (non-named) entities.
pub const OTHER_LABEL: &str = "OTHER";

/// A single entity-type label drawn from a [`TypeInventory`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct EntityType(String);

impl EntityType {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::InvalidParams(format!(
                "entity type label must be non-empty without whitespace, got {label:?}"
            )));
        }
        Ok(EntityType(label))
    }

    pub fn other() -> Self {
        EntityType(OTHER_LABEL.to_string())
    }

    pub fn is_other(&self) -> bool {
        self.0 == OTHER_LABEL
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for EntityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for EntityType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EntityType::new(s)
    }
}

impl TryFrom<String> for EntityType {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        EntityType::new(s)
    }
}

impl From<EntityType> for String {
    fn from(t: EntityType) -> String {
        t.0
    }
}

/// Ordered set of entity-type labels. `OTHER` is always a member; it is
/// appended at the end if the definition does not list it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TypeInventory {
    types: Vec<EntityType>,
    version: String,
}

impl TypeInventory {
    pub fn new<I, S>(labels: I, version: impl Into<String>) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut types = Vec::new();
        for label in labels {
            let t = EntityType::new(label)?;
            if types.contains(&t) {
                return Err(Error::InvalidParams(format!(
                    "duplicate entity type {t} in inventory"
                )));
            }
            types.push(t);
        }
        if !types.iter().any(EntityType::is_other) {
            types.push(EntityType::other());
        }
        Ok(TypeInventory {
            types,
            version: version.into(),
        })
    }

    pub fn types(&self) -> &[EntityType] {
        &self.types
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn contains(&self, t: &EntityType) -> bool {
        self.types.contains(t)
    }

    /// Position in definition order; used for deterministic tie-breaks.
    pub fn index_of(&self, t: &EntityType) -> Option<usize> {
        self.types.iter().position(|x| x == t)
    }

    /// All types except `OTHER`, in definition order.
    pub fn non_other(&self) -> impl Iterator<Item = &EntityType> {
        self.types.iter().filter(|t| !t.is_other())
    }

    /// Parses the inventory text format: an optional
    /// `# wiki-type-inventory version=<v>` header followed by one label per
    /// line. Other `#` lines are comments.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut version = String::from("1");
        let mut labels = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let rest = rest.trim();
                if let Some(v) = rest
                    .strip_prefix("wiki-type-inventory")
                    .and_then(|r| r.trim().strip_prefix("version="))
                {
                    version = v.trim().to_string();
                }
                continue;
            }
            labels.push(line.to_string());
        }
        TypeInventory::new(labels, version)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# wiki-type-inventory version={}\n", self.version);
        for t in &self.types {
            out.push_str(t.label());
            out.push('\n');
        }
        out
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_text(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(std::fs::write(path, self.to_text())?)
    }
}

/// A single pre-tokenized word. Never empty, never contains a newline.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Token(String);

impl Token {
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        if text.is_empty() || text.contains('\n') || text.contains('\r') {
            return Err(Error::InvalidParams(format!(
                "token must be non-empty without newlines, got {text:?}"
            )));
        }
        Ok(Token(text))
    }

    pub fn text(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl TryFrom<String> for Token {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        Token::new(s)
    }
}

impl From<Token> for String {
    fn from(t: Token) -> String {
        t.0
    }
}

/// Joins token texts with single spaces.
pub fn join_tokens(tokens: &[Token]) -> String {
    let mut out = String::new();
    for (i, t) in tokens.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(t.text());
    }
    out
}

/// Page classification by structural role. Everything except `Entity`
/// classifies as `OTHER` downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PageKind {
    Entity,
    Disambig,
    Redirect,
    List,
}

impl fmt::Display for PageKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PageKind::Entity => "entity",
            PageKind::Disambig => "disambig",
            PageKind::Redirect => "redirect",
            PageKind::List => "list",
        };
        f.write_str(s)
    }
}

/// One encyclopedia page in a normalized, pre-tokenized corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct WikiPage {
    pub page_id: String,
    pub language: String,
    pub title_name: String,
    pub title_aux: Option<String>,
    pub kind: PageKind,
    pub first_sentence: Vec<Token>,
    pub body_tokens: Vec<Token>,
    pub infobox_attrs: Vec<String>,
    /// Inter-language links: language code → title in that language.
    pub interlang: BTreeMap<String, String>,
}

impl WikiPage {
    /// Reconstructs the full title, re-attaching the bracketed auxiliary
    /// part when present.
    pub fn full_title(&self) -> String {
        match &self.title_aux {
            Some(aux) => format!("{} ({})", self.title_name, aux),
            None => self.title_name.clone(),
        }
    }

    /// Number of whitespace-separated words in the title name.
    pub fn title_word_count(&self) -> usize {
        self.title_name.split_whitespace().count()
    }
}

/// Splits a raw page title into the entity name and the optional
/// auxiliary text carried in a final trailing bracket pair.
///
/// Only the final trailing pair is stripped: `"A (b) (c)"` yields
/// `("A (b)", Some("c"))`. A title that is entirely a bracket, or whose
/// bracket is empty, is kept whole so the name part is never empty.
pub fn parse_title(raw_title: &str) -> Result<(String, Option<String>)> {
    let trimmed = raw_title.trim();
    if trimmed.is_empty() {
        return Err(Error::InvalidTitle);
    }
    if !trimmed.ends_with(')') {
        return Ok((trimmed.to_string(), None));
    }
    let bytes = trimmed.as_bytes();
    let mut depth = 1usize;
    let mut open = None;
    for i in (0..bytes.len() - 1).rev() {
        match bytes[i] {
            b')' => depth += 1,
            b'(' => {
                depth -= 1;
                if depth == 0 {
                    open = Some(i);
                    break;
                }
            }
            _ => {}
        }
    }
    match open {
        Some(i) => {
            let name = trimmed[..i].trim_end();
            let aux = trimmed[i + 1..trimmed.len() - 1].trim();
            if name.is_empty() || aux.is_empty() {
                Ok((trimmed.to_string(), None))
            } else {
                Ok((name.to_string(), Some(aux.to_string())))
            }
        }
        None => Ok((trimmed.to_string(), None)),
    }
}

/// Lookup structure over a loaded corpus: by page id and by full title.
/// On title collisions the first page wins.
pub struct PageIndex<'a> {
    by_id: HashMap<&'a str, &'a WikiPage>,
    by_title: HashMap<String, &'a WikiPage>,
}

impl<'a> PageIndex<'a> {
    pub fn new(pages: &'a [WikiPage]) -> Self {
        let mut by_id = HashMap::with_capacity(pages.len());
        let mut by_title = HashMap::with_capacity(pages.len());
        for page in pages {
            by_id.entry(page.page_id.as_str()).or_insert(page);
            by_title.entry(page.full_title()).or_insert(page);
        }
        PageIndex { by_id, by_title }
    }

    pub fn by_id(&self, page_id: &str) -> Option<&'a WikiPage> {
        self.by_id.get(page_id).copied()
    }

    pub fn by_title(&self, title: &str) -> Option<&'a WikiPage> {
        self.by_title.get(title).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn title_with_aux() {
        assert_eq!(
            parse_title("Jordan (company)").unwrap(),
            ("Jordan".to_string(), Some("company".to_string()))
        );
    }

    #[test]
    fn title_without_aux() {
        assert_eq!(
            parse_title("Nobel Prize").unwrap(),
            ("Nobel Prize".to_string(), None)
        );
    }

    #[test]
    fn title_empty_is_error() {
        assert!(matches!(parse_title(""), Err(Error::InvalidTitle)));
        assert!(matches!(parse_title("   "), Err(Error::InvalidTitle)));
    }

    #[test]
    fn title_only_final_bracket_stripped() {
        assert_eq!(
            parse_title("A (b) (c)").unwrap(),
            ("A (b)".to_string(), Some("c".to_string()))
        );
    }

    #[test]
    fn title_nested_bracket() {
        assert_eq!(
            parse_title("Foo (bar (baz))").unwrap(),
            ("Foo".to_string(), Some("bar (baz)".to_string()))
        );
    }

    #[test]
    fn title_never_empty_name() {
        // A title that is a bracket from the start keeps its full form.
        assert_eq!(
            parse_title("(company)").unwrap(),
            ("(company)".to_string(), None)
        );
        assert_eq!(parse_title("A ()").unwrap(), ("A ()".to_string(), None));
    }

    #[test]
    fn title_unbalanced_close() {
        assert_eq!(parse_title("A b)").unwrap(), ("A b)".to_string(), None));
    }

    #[test]
    fn inventory_other_always_present() {
        let inv = TypeInventory::new(["PERSON", "GPE"], "1").unwrap();
        assert_eq!(inv.len(), 3);
        assert!(inv.contains(&EntityType::other()));
        assert_eq!(inv.types()[2], EntityType::other());

        let inv = TypeInventory::new(["OTHER", "PERSON"], "1").unwrap();
        assert_eq!(inv.len(), 2);
        assert_eq!(inv.types()[0], EntityType::other());
    }

    #[test]
    fn inventory_rejects_duplicates() {
        assert!(TypeInventory::new(["PERSON", "PERSON"], "1").is_err());
    }

    #[test]
    fn inventory_text_round_trip() {
        let inv = TypeInventory::new(["PERSON", "GPE", "ORGANIZATION"], "v2").unwrap();
        let text = inv.to_text();
        let back = TypeInventory::from_text(&text).unwrap();
        assert_eq!(inv, back);
        assert_eq!(back.version(), "v2");
    }

    #[test]
    fn entity_type_rejects_whitespace() {
        assert!(EntityType::new("PER SON").is_err());
        assert!(EntityType::new("PER\tSON").is_err());
        assert!(EntityType::new("").is_err());
    }

    #[test]
    fn token_rejects_newline() {
        assert!(Token::new("a\nb").is_err());
        assert!(Token::new("").is_err());
        assert!(Token::new("ok").is_ok());
    }
}

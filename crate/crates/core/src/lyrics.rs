//! Aligned-lyrics data model.
//!
//! A [`LyricsDocument`] is one song in one language, split into explicitly
//! labelled sections of lines. Structure is never inferred from blank lines:
//! the JSON input format carries section boundaries directly. Two documents
//! with the same section/line shape form an [`AlignedPair`], the unit every
//! metric consumes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Language {
    #[serde(rename = "EN")]
    En,
    #[serde(rename = "JA")]
    Ja,
    #[serde(rename = "KO")]
    Ko,
}

impl Language {
    pub const ALL: [Language; 3] = [Language::En, Language::Ja, Language::Ko];

    pub fn tag(self) -> &'static str {
        match self {
            Language::En => "EN",
            Language::Ja => "JA",
            Language::Ko => "KO",
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Language {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "EN" => Ok(Language::En),
            "JA" => Ok(Language::Ja),
            "KO" => Ok(Language::Ko),
            other => Err(Error::Validation(format!(
                "unknown language tag {other:?} (expected EN, JA or KO)"
            ))),
        }
    }
}

/// A single lyric line, optionally carrying an English gloss.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Line {
    text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    gloss: Option<String>,
}

impl Line {
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        if text.trim().is_empty() {
            return Err(Error::Validation("line text is empty".into()));
        }
        Ok(Line { text, gloss: None })
    }

    pub fn with_gloss(mut self, gloss: impl Into<String>) -> Self {
        let gloss = gloss.into();
        self.gloss = if gloss.trim().is_empty() { None } else { Some(gloss) };
        self
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn gloss(&self) -> Option<&str> {
        self.gloss.as_deref()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    lines: Vec<Line>,
}

impl Section {
    pub fn new(lines: Vec<Line>) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::Validation("section has no lines".into()));
        }
        Ok(Section { label: None, lines })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Convenience constructor from plain line texts.
    pub fn from_texts<S: AsRef<str>>(texts: &[S]) -> Result<Self> {
        let lines = texts
            .iter()
            .map(|t| Line::new(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Section::new(lines)
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SongMetadata {
    pub title: String,
    pub artist: String,
    pub genre: String,
    pub original_language: Language,
    pub official: bool,
}

impl SongMetadata {
    pub fn new(title: impl Into<String>, original_language: Language) -> Self {
        SongMetadata {
            title: title.into(),
            artist: String::new(),
            genre: String::new(),
            original_language,
            official: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LyricsDocument {
    language: Language,
    metadata: SongMetadata,
    sections: Vec<Section>,
}

impl LyricsDocument {
    pub fn new(language: Language, metadata: SongMetadata, sections: Vec<Section>) -> Result<Self> {
        if sections.is_empty() {
            return Err(Error::Validation("document has no sections".into()));
        }
        Ok(LyricsDocument {
            language,
            metadata,
            sections,
        })
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn metadata(&self) -> &SongMetadata {
        &self.metadata
    }

    pub fn sections(&self) -> &[Section] {
        &self.sections
    }

    /// Number of sections (m).
    pub fn section_count(&self) -> usize {
        self.sections.len()
    }

    /// Total number of lines (n).
    pub fn line_count(&self) -> usize {
        self.sections.iter().map(Section::len).sum()
    }

    pub fn lines(&self) -> impl Iterator<Item = &Line> + '_ {
        self.sections.iter().flat_map(|s| s.lines.iter())
    }

    pub fn section_line_counts(&self) -> Vec<usize> {
        self.sections.iter().map(Section::len).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLine {
    text: String,
    #[serde(default)]
    gloss: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSection {
    #[serde(default)]
    label: Option<String>,
    lines: Vec<RawLine>,
}

#[derive(Deserialize)]
struct RawMetadata {
    title: String,
    #[serde(default)]
    artist: String,
    #[serde(default)]
    genre: String,
    original_language: String,
    #[serde(default)]
    official: bool,
}

#[derive(Deserialize)]
struct RawDocument {
    language: String,
    metadata: RawMetadata,
    sections: Vec<RawSection>,
}

/// Parses and validates a JSON lyrics document.
pub fn parse_document(raw: &str) -> Result<LyricsDocument> {
    let doc: RawDocument = serde_json::from_str(raw).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    let language: Language = doc.language.parse()?;
    let metadata = SongMetadata {
        title: doc.metadata.title,
        artist: doc.metadata.artist,
        genre: doc.metadata.genre,
        original_language: doc.metadata.original_language.parse()?,
        official: doc.metadata.official,
    };

    let mut sections = Vec::with_capacity(doc.sections.len());
    for (si, raw_section) in doc.sections.into_iter().enumerate() {
        let mut lines = Vec::with_capacity(raw_section.lines.len());
        for (li, raw_line) in raw_section.lines.into_iter().enumerate() {
            let mut line = Line::new(raw_line.text)
                .map_err(|_| Error::Validation(format!("section {si}, line {li}: text is empty")))?;
            if let Some(gloss) = raw_line.gloss {
                line = line.with_gloss(gloss);
            }
            lines.push(line);
        }
        let mut section = Section::new(lines).map_err(|_| Error::Validation(format!("section {si} has no lines")))?;
        section.label = raw_section.label;
        sections.push(section);
    }

    LyricsDocument::new(language, metadata, sections)
}

/// Two documents with identical section/line shape in different languages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlignedPair {
    source: LyricsDocument,
    target: LyricsDocument,
    singable: bool,
}

impl AlignedPair {
    pub fn source(&self) -> &LyricsDocument {
        &self.source
    }

    pub fn target(&self) -> &LyricsDocument {
        &self.target
    }

    pub fn singable(&self) -> bool {
        self.singable
    }

    pub fn section_count(&self) -> usize {
        self.source.section_count()
    }

    pub fn line_count(&self) -> usize {
        self.source.line_count()
    }

    /// Iterates over `(source_line, target_line)` in document order.
    pub fn line_pairs(&self) -> impl Iterator<Item = (&Line, &Line)> + '_ {
        self.source.lines().zip(self.target.lines())
    }

    /// Iterates over `(source_section, target_section)` in document order.
    pub fn section_pairs(&self) -> impl Iterator<Item = (&Section, &Section)> + '_ {
        self.source.sections.iter().zip(self.target.sections.iter())
    }
}

pub fn make_aligned_pair(source: LyricsDocument, target: LyricsDocument, singable: bool) -> Result<AlignedPair> {
    if source.language == target.language {
        return Err(Error::Validation(format!(
            "source and target share the same language ({})",
            source.language
        )));
    }
    let (ms, mt) = (source.section_count(), target.section_count());
    for (i, (s, t)) in source.sections.iter().zip(&target.sections).enumerate() {
        if s.len() != t.len() {
            return Err(Error::Alignment {
                section: i,
                message: format!("source has {} lines, target has {}", s.len(), t.len()),
            });
        }
    }
    if ms != mt {
        return Err(Error::Alignment {
            section: ms.min(mt),
            message: format!("source has {ms} sections, target has {mt}"),
        });
    }
    Ok(AlignedPair {
        source,
        target,
        singable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc_json(language: &str, sections: &str) -> String {
        format!(
            r#"{{"language":"{language}","metadata":{{"title":"t","artist":"a","genre":"g","original_language":"EN","official":true}},"sections":{sections}}}"#
        )
    }

    #[test]
    fn parses_minimal_document() {
        let doc = parse_document(&doc_json(
            "KO",
            r#"[{"label":"verse","lines":[{"text":"별","gloss":"star"}]}]"#,
        ))
        .unwrap();
        assert_eq!(doc.language(), Language::Ko);
        assert_eq!(doc.section_count(), 1);
        assert_eq!(doc.sections()[0].label(), Some("verse"));
        assert_eq!(doc.sections()[0].lines()[0].gloss(), Some("star"));
    }

    #[test]
    fn rejects_zero_sections() {
        let err = parse_document(&doc_json("EN", "[]")).unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
    }

    #[test]
    fn rejects_empty_section() {
        let err = parse_document(&doc_json("EN", r#"[{"lines":[]}]"#)).unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
    }

    #[test]
    fn rejects_whitespace_line() {
        let err = parse_document(&doc_json("EN", r#"[{"lines":[{"text":"  \t"}]}]"#)).unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
    }

    #[test]
    fn rejects_unknown_language() {
        let err = parse_document(&doc_json("FR", r#"[{"lines":[{"text":"la"}]}]"#)).unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = parse_document("{\n  \"language\": \"EN\",\n  oops\n}").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other}"),
        }
    }

    fn simple(lang: Language, shape: &[usize]) -> LyricsDocument {
        let sections = shape
            .iter()
            .map(|&n| Section::from_texts(&vec!["la"; n]).unwrap())
            .collect();
        LyricsDocument::new(lang, SongMetadata::new("x", Language::En), sections).unwrap()
    }

    #[test]
    fn alignment_errors_name_the_section() {
        let err = make_aligned_pair(simple(Language::En, &[2, 2]), simple(Language::Ja, &[2, 2, 1]), true).unwrap_err();
        assert!(matches!(err, Error::Alignment { section: 2, .. }), "{err}");

        let err = make_aligned_pair(simple(Language::En, &[2, 3]), simple(Language::Ja, &[2, 2]), true).unwrap_err();
        assert!(matches!(err, Error::Alignment { section: 1, .. }), "{err}");
    }

    #[test]
    fn same_language_pair_is_rejected() {
        let err = make_aligned_pair(simple(Language::En, &[1]), simple(Language::En, &[1]), true).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }
}

use crate::error::{Error, Result};
use crate::lyrics::{Language, Line};

/// Renders Japanese or Korean text into English. English input passes
/// through unchanged.
pub trait TranslationProvider: Send + Sync {
    fn translate_batch(&self, texts: &[String], from: Language) -> Result<Vec<String>>;

    fn translate(&self, text: &str, from: Language) -> Result<String> {
        if from == Language::En {
            return Ok(text.to_string());
        }
        let mut out = self.translate_batch(&[text.to_string()], from)?;
        out.pop()
            .ok_or_else(|| Error::Provider("translator returned no text".into()))
    }
}

/// English rendering of a line: its gloss if present, otherwise the
/// translator's output, otherwise the text itself for English lines.
pub fn english_text(line: &Line, language: Language, translator: Option<&dyn TranslationProvider>) -> Result<String> {
    if let Some(gloss) = line.gloss() {
        return Ok(gloss.to_string());
    }
    if language == Language::En {
        return Ok(line.text().to_string());
    }
    match translator {
        Some(t) => t.translate(line.text(), language),
        None => Err(Error::Config(format!(
            "{language} line {:?} has no gloss and no translator is configured",
            line.text()
        ))),
    }
}

/// English renderings of many lines, batching the ones that need the
/// translator into one call.
pub fn english_texts(
    lines: &[&Line],
    language: Language,
    translator: Option<&dyn TranslationProvider>,
) -> Result<Vec<String>> {
    let mut out: Vec<Option<String>> = lines
        .iter()
        .map(|l| match (l.gloss(), language) {
            (Some(g), _) => Some(g.to_string()),
            (None, Language::En) => Some(l.text().to_string()),
            (None, _) => None,
        })
        .collect();
    let pending: Vec<usize> = (0..out.len()).filter(|&i| out[i].is_none()).collect();
    if pending.is_empty() {
        return Ok(out.into_iter().map(Option::unwrap).collect());
    }
    let Some(t) = translator else {
        return english_text(lines[pending[0]], language, None).map(|_| unreachable!());
    };
    let texts: Vec<String> = pending.iter().map(|&i| lines[i].text().to_string()).collect();
    let translated = t.translate_batch(&texts, language)?;
    if translated.len() != texts.len() {
        return Err(Error::Provider(format!(
            "translator returned {} texts for {}",
            translated.len(),
            texts.len()
        )));
    }
    for (i, text) in pending.into_iter().zip(translated) {
        out[i] = Some(text);
    }
    Ok(out.into_iter().map(Option::unwrap).collect())
}

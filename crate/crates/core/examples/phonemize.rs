//! Phoneme streams and syllable counts for a line in each language.
//!
//! ```text
//! cargo run --example phonemize
//! ```

use lyreval::{Language, Phonology};

fn main() -> lyreval::Result<()> {
    let phonology = Phonology::standard();
    let samples = [
        (Language::En, "Twinkle, twinkle, little star"),
        (Language::En, "Silent night holy night"),
        (Language::Ja, "あけましておめでとうございます"),
        (Language::Ja, "ラーメンがすきっ"),
        (Language::Ko, "고요한밤 거룩한밤"),
        (Language::Ko, "새해 복 많이 받으세요"),
    ];
    for (lang, text) in samples {
        let seq = phonology.phonemize_text(text, lang)?;
        let syllables = phonology.count_syllables_text(text, lang)?;
        println!("[{lang}] {text}");
        println!("     syllables: {syllables}");
        println!("     phonemes:  {}", seq.symbols().join(" "));
    }

    // Kanji has no reading without a dictionary, so it is rejected.
    match phonology.phonemize_text("雪だるま", Language::Ja) {
        Ok(_) => unreachable!(),
        Err(e) => println!("[JA] 雪だるま → {e}"),
    }
    Ok(())
}

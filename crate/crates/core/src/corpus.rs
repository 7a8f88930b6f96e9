//! Example programs bundled into the binary, five per language.

use serde::Serialize;

use crate::model::Language;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Example {
    pub id: &'static str,
    pub title: &'static str,
    pub code: &'static str,
}

macro_rules! example {
    ($id:literal, $title:literal, $path:literal) => {
        Example { id: $id, title: $title, code: include_str!(concat!("../data/examples/", $path)) }
    };
}

const PYTHON: [Example; 5] = [
    example!("python-fibonacci", "Fibonacci numbers", "python/fibonacci.py"),
    example!("python-binary-search", "Binary search", "python/binary_search.py"),
    example!("python-word-count", "Word count", "python/word_count.py"),
    example!("python-bank-account", "Bank account class", "python/bank_account.py"),
    example!("python-grades", "Letter grades with match", "python/grades.py"),
];

const JAVA: [Example; 5] = [
    example!("java-fibonacci", "Fibonacci numbers", "java/Fibonacci.java"),
    example!("java-binary-search", "Binary search", "java/BinarySearch.java"),
    example!("java-word-count", "Word count", "java/WordCount.java"),
    example!("java-bank-account", "Bank account class", "java/BankAccount.java"),
    example!("java-day-kind", "Day kind with switch", "java/DayKind.java"),
];

const JAVASCRIPT: [Example; 5] = [
    example!("javascript-fibonacci", "Fibonacci numbers", "javascript/fibonacci.js"),
    example!("javascript-binary-search", "Binary search", "javascript/binary_search.js"),
    example!("javascript-word-count", "Word count", "javascript/word_count.js"),
    example!("javascript-bank-account", "Bank account class", "javascript/bank_account.js"),
    example!("javascript-traffic-light", "Traffic light with switch", "javascript/traffic_light.js"),
];

pub fn examples(language: Language) -> &'static [Example] {
    match language {
        Language::Python => &PYTHON,
        Language::Java => &JAVA,
        Language::JavaScript => &JAVASCRIPT,
    }
}

pub fn find(id: &str) -> Option<(Language, &'static Example)> {
    Language::ALL.into_iter().find_map(|lang| examples(lang).iter().find(|e| e.id == id).map(|e| (lang, e)))
}

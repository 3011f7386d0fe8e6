// Minimal Java syntax highlighting plus matched-keyword emphasis.
// Builds DOM nodes (never innerHTML with raw server text).

const JAVA_KEYWORDS = new Set(
  (
    "abstract assert boolean break byte case catch char class const continue " +
    "default do double else enum extends final finally float for goto if " +
    "implements import instanceof int interface long native new package " +
    "private protected public return short static strictfp super switch " +
    "synchronized this throw throws transient try void volatile while " +
    "true false null var record yield"
  ).split(" "),
);

const TOKEN_RE =
  /(\/\/[^\n]*|\/\*[\s\S]*?\*\/)|("(?:\\.|[^"\\\n])*"|'(?:\\.|[^'\\\n])*')|([A-Za-z_$][\w$]*)|(\d[\w.]*)|([\s\S])/g;

function classify(word: string): string {
  if (JAVA_KEYWORDS.has(word)) return "tok-kw";
  const first = word.charAt(0);
  if (first === first.toUpperCase() && first !== first.toLowerCase()) return "tok-type";
  return "";
}

function isEmphasized(word: string, matched: readonly string[]): boolean {
  const lower = word.toLowerCase();
  return matched.some((m) => lower.includes(m.toLowerCase()));
}

export function highlightJava(source: string, matched: readonly string[]): DocumentFragment {
  const fragment = document.createDocumentFragment();
  let match: RegExpExecArray | null;
  TOKEN_RE.lastIndex = 0;
  while ((match = TOKEN_RE.exec(source)) !== null) {
    const [text, comment, str, word, num] = match;
    let cls = "";
    if (comment) cls = "tok-com";
    else if (str) cls = "tok-str";
    else if (num) cls = "tok-num";
    else if (word) {
      cls = classify(word);
      if (isEmphasized(word, matched)) cls = (cls + " match").trim();
    }
    if (cls) {
      const span = document.createElement("span");
      span.className = cls;
      span.textContent = text;
      fragment.appendChild(span);
    } else {
      fragment.appendChild(document.createTextNode(text));
    }
  }
  return fragment;
}

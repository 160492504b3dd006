#!/usr/bin/env python3
"""Regenerate src/rentlab/data/lexicon.tsv from the curated stem list below.

Each stem carries a valence in [-4, 4] and a set of inflection rules; the
expansion writes one word<TAB>valence line per surface form. Inflected forms
inherit the stem valence. Fixture words (FIXED below) are written with their
pinned ratings no matter what the stem list says.

Run from the repo root:  python scripts/build_lexicon.py
"""

from __future__ import annotations

import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "rentlab" / "data" / "lexicon.tsv"

# Ratings that must survive any regeneration.
FIXED = {
    "tragedy": -3.4,
    "insane": -1.7,
    "flattery": 0.4,
    "stealthily": 0.1,
    "awesome": 1.8,
    "amazing": 1.8,
}

# stem: (valence, inflections). Inflection codes:
#   s: plural/3rd person -s      ed/d: past            ing: progressive
#   ly: adverb                   er/est: comparative   r/st: -e stem comparative
#   ness: nominal                es: -es plural        ies: -y -> -ies
# Forms are generated naively; a handful of awkward surface forms are harmless
# for lookup purposes (scoring only ever goes word -> valence).
POSITIVE = {
    "able": (1.0, ["ly"]),
    "abundance": (2.1, []),
    "abundant": (2.0, ["ly"]),
    "accept": (1.1, ["s", "ed", "ing", "ance"]),
    "acceptable": (1.3, []),
    "acclaim": (2.0, ["s", "ed", "ing"]),
    "accommodating": (1.9, []),
    "accomplish": (1.8, ["es", "ed", "ing", "ment"]),
    "achieve": (1.7, ["s", "d", "ment", "ments"]),
    "admirable": (2.6, []),
    "admire": (2.2, ["s", "d", "r"]),
    "adorable": (2.5, []),
    "adore": (2.6, ["s", "d", "ing"]),
    "advantage": (1.6, ["s"]),
    "adventure": (1.4, ["s", "some"]),
    "affection": (2.4, ["s", "ate", "ately"]),
    "affordable": (1.5, []),
    "agreeable": (1.8, []),
    "airy": (1.2, []),
    "amaze": (2.3, ["s", "d"]),
    "ambitious": (1.2, ["ly"]),
    "amiable": (1.9, []),
    "amicable": (1.7, []),
    "ample": (1.3, []),
    "amuse": (1.5, ["s", "d", "ment"]),
    "amusing": (1.6, ["ly"]),
    "angelic": (2.7, []),
    "appeal": (1.4, ["s", "ed", "ing"]),
    "appealing": (1.8, []),
    "appreciate": (1.9, ["s", "d"]),
    "appreciative": (2.0, ["ly"]),
    "attentive": (1.8, ["ly", "ness"]),
    "attract": (1.4, ["s", "ed", "ing", "ion"]),
    "attractive": (1.9, ["ly"]),
    "authentic": (1.6, ["ally"]),
    "awe": (1.0, ["d"]),
    "awesomeness": (2.6, []),
    "beautiful": (2.9, ["ly"]),
    "beauty": (2.7, []),
    "believable": (1.1, []),
    "beloved": (2.7, []),
    "benefit": (1.5, ["s", "ed", "ing"]),
    "benevolent": (2.3, ["ly"]),
    "best": (3.2, []),
    "better": (1.9, []),
    "bless": (1.8, ["ed", "ing", "ings"]),
    "blessing": (2.2, ["s"]),
    "bliss": (2.7, ["ful", "fully"]),
    "bonus": (1.7, ["es"]),
    "boost": (1.4, ["s", "ed", "ing"]),
    "brave": (2.0, ["ly", "ry"]),
    "breathtaking": (3.0, []),
    "bright": (1.8, ["er", "est", "ly", "ness"]),
    "brilliant": (2.8, ["ly"]),
    "calm": (1.3, ["er", "est", "ly", "ing", "ness"]),
    "capable": (1.4, []),
    "care": (1.6, ["s", "d", "ful", "fully"]),
    "carefree": (1.5, []),
    "caring": (2.2, []),
    "celebrate": (2.2, ["s", "d"]),
    "champion": (2.1, ["s"]),
    "charm": (1.9, ["s", "ed", "ing"]),
    "charming": (2.4, ["ly"]),
    "cheer": (1.9, ["s", "ed", "ing", "ful", "fully"]),
    "cheerful": (2.3, ["ly", "ness"]),
    "cherish": (2.3, ["es", "ed", "ing"]),
    "chic": (1.5, []),
    "clean": (1.7, ["er", "est", "ed", "ing", "liness"]),
    "clear": (1.0, ["er", "est", "ly"]),
    "clever": (2.0, ["ly", "ness"]),
    "comfort": (1.7, ["s", "ed", "ing"]),
    "comfortable": (2.1, []),
    "comfortably": (1.9, []),
    "comfy": (2.0, []),
    "commend": (1.8, ["s", "ed", "able"]),
    "compassion": (2.2, ["ate", "ately"]),
    "competent": (1.4, ["ly"]),
    "compliment": (1.8, ["s", "ed", "ary"]),
    "confident": (1.8, ["ly"]),
    "congenial": (1.7, []),
    "considerate": (1.9, ["ly"]),
    "content": (1.3, ["ed", "ment"]),
    "convenient": (1.6, ["ly"]),
    "convenience": (1.4, ["s"]),
    "cool": (1.3, ["er", "est"]),
    "courteous": (1.8, ["ly"]),
    "courtesy": (1.6, []),
    "cozy": (2.0, []),
    "creative": (1.7, ["ly"]),
    "cute": (2.0, ["r", "st", "ly"]),
    "darling": (2.5, []),
    "dazzle": (2.2, ["s", "d"]),
    "dazzling": (2.6, []),
    "dear": (1.6, ["est"]),
    "decent": (1.2, ["ly"]),
    "dedicated": (1.6, []),
    "delicious": (2.3, ["ly"]),
    "delight": (2.3, ["s", "ed", "ing"]),
    "delightful": (2.8, ["ly"]),
    "dependable": (1.7, []),
    "deserving": (1.3, []),
    "desirable": (1.5, []),
    "devoted": (1.8, ["ly"]),
    "divine": (2.5, ["ly"]),
    "dream": (1.2, ["s", "y"]),
    "dreamy": (1.9, []),
    "eager": (1.5, ["ly", "ness"]),
    "easy": (1.2, []),
    "easier": (1.3, []),
    "easiest": (1.5, []),
    "easygoing": (1.4, []),
    "ecstatic": (3.0, ["ally"]),
    "effective": (1.3, ["ly"]),
    "efficient": (1.5, ["ly"]),
    "effortless": (1.6, ["ly"]),
    "elated": (2.6, []),
    "elegance": (2.1, []),
    "elegant": (2.2, ["ly"]),
    "enchanting": (2.5, ["ly"]),
    "encourage": (1.7, ["s", "d", "ment"]),
    "encouraging": (1.9, ["ly"]),
    "energetic": (1.5, ["ally"]),
    "engaging": (1.6, []),
    "enjoy": (2.0, ["s", "ed", "ing", "ment", "able"]),
    "enjoyable": (2.2, []),
    "enthusiasm": (1.9, []),
    "enthusiastic": (2.1, ["ally"]),
    "entertaining": (1.8, []),
    "epic": (2.2, []),
    "excellence": (2.7, []),
    "excellent": (2.7, ["ly"]),
    "exceptional": (2.5, ["ly"]),
    "excite": (1.9, ["s", "d", "ment"]),
    "exciting": (2.2, ["ly"]),
    "exquisite": (2.7, ["ly"]),
    "fabulous": (2.6, ["ly"]),
    "fair": (1.1, ["ly", "ness"]),
    "faith": (1.6, ["ful", "fully"]),
    "fancy": (1.4, []),
    "fantastic": (2.6, ["ally"]),
    "fascinating": (2.2, ["ly"]),
    "favor": (1.3, ["s", "ed", "able", "ite", "ites"]),
    "fine": (1.0, ["st", "ly"]),
    "first-rate": (2.5, []),
    "fit": (1.0, ["s", "ting"]),
    "flawless": (2.8, ["ly"]),
    "flexible": (1.3, []),
    "fond": (1.7, ["ly", "ness"]),
    "fresh": (1.5, ["er", "est", "ly", "ness"]),
    "friendly": (2.2, []),
    "friendliness": (2.0, []),
    "fun": (2.3, []),
    "funny": (1.9, []),
    "generous": (2.3, ["ly"]),
    "generosity": (2.2, []),
    "genial": (1.6, []),
    "gentle": (1.8, []),
    "gently": (1.6, []),
    "genuine": (1.6, ["ly"]),
    "glad": (2.0, ["ly", "ness"]),
    "glee": (2.2, ["ful", "fully"]),
    "glorious": (2.8, ["ly"]),
    "glory": (2.3, []),
    "good": (1.9, ["ness"]),
    "gorgeous": (2.8, ["ly"]),
    "grace": (1.8, ["ful", "fully"]),
    "gracious": (2.2, ["ly"]),
    "grand": (2.1, ["er", "est", "ly"]),
    "grateful": (2.3, ["ly"]),
    "gratitude": (2.2, []),
    "great": (3.1, ["er", "est", "ly", "ness"]),
    "gem": (2.4, ["s"]),
    "handy": (1.3, []),
    "happy": (2.7, []),
    "happily": (2.6, []),
    "happiness": (2.7, []),
    "heaven": (2.3, ["ly"]),
    "helpful": (1.8, ["ly", "ness"]),
    "hero": (2.4, ["es", "ic"]),
    "highlight": (1.6, ["s"]),
    "hilarious": (1.9, ["ly"]),
    "homey": (1.8, []),
    "honest": (1.9, ["ly", "y"]),
    "hope": (1.9, ["s", "d", "ful", "fully"]),
    "hospitable": (2.0, []),
    "hospitality": (2.1, []),
    "humble": (1.2, []),
    "ideal": (2.2, ["ly"]),
    "immaculate": (2.6, ["ly"]),
    "impress": (1.9, ["es", "ed", "ing"]),
    "impressive": (2.3, ["ly"]),
    "improve": (1.5, ["s", "d", "ment", "ments"]),
    "incredible": (2.5, []),
    "incredibly": (2.3, []),
    "innovative": (1.6, []),
    "inspire": (1.9, ["s", "d", "ing"]),
    "inspiring": (2.1, []),
    "interesting": (1.4, ["ly"]),
    "intimate": (1.2, []),
    "inviting": (1.9, []),
    "irresistible": (2.2, []),
    "joy": (2.6, ["s", "ful", "fully", "ous"]),
    "keen": (1.3, ["ly"]),
    "kind": (2.0, ["er", "est", "ly", "ness"]),
    "kindhearted": (2.4, []),
    "laugh": (1.8, ["s", "ed", "ing", "ter"]),
    "lavish": (1.7, ["ly"]),
    "legendary": (2.0, []),
    "like": (1.5, ["s", "d"]),
    "likable": (1.8, []),
    "lovely": (2.6, []),
    "love": (3.2, ["s", "d"]),
    "loving": (2.7, ["ly"]),
    "loyal": (1.8, ["ly", "ty"]),
    "lucky": (1.9, []),
    "luckily": (1.7, []),
    "luxurious": (2.3, ["ly"]),
    "luxury": (2.1, []),
    "magical": (2.4, ["ly"]),
    "magnificent": (2.9, ["ly"]),
    "marvelous": (2.7, ["ly"]),
    "masterpiece": (2.6, ["s"]),
    "memorable": (1.9, []),
    "merry": (2.1, []),
    "mighty": (1.4, []),
    "miracle": (2.5, ["s"]),
    "modern": (1.1, []),
    "neat": (1.5, ["ly", "ness"]),
    "nice": (1.8, ["r", "st", "ly"]),
    "noble": (1.9, []),
    "nurturing": (1.8, []),
    "optimistic": (1.8, ["ally"]),
    "outstanding": (2.7, ["ly"]),
    "paradise": (2.8, []),
    "passion": (1.9, ["ate", "ately"]),
    "peace": (2.2, ["ful", "fully"]),
    "perfect": (2.7, ["ly", "ion"]),
    "phenomenal": (2.8, ["ly"]),
    "picturesque": (2.2, []),
    "play": (1.0, ["ful", "fully"]),
    "pleasant": (2.0, ["ly"]),
    "please": (1.5, ["s", "d"]),
    "pleasing": (1.8, []),
    "pleasure": (2.2, ["s"]),
    "plush": (1.6, []),
    "polite": (1.8, ["ly", "ness"]),
    "popular": (1.5, ["ity"]),
    "positive": (1.8, ["ly"]),
    "praise": (2.1, ["s", "d", "worthy"]),
    "precious": (2.2, ["ly"]),
    "premium": (1.5, []),
    "pretty": (1.9, []),
    "pride": (1.4, []),
    "pristine": (2.4, []),
    "professional": (1.5, ["ly", "ism"]),
    "prompt": (1.4, ["ly", "ness"]),
    "prosper": (1.9, ["s", "ous", "ity"]),
    "proud": (1.9, ["ly"]),
    "quaint": (1.5, []),
    "quality": (1.3, []),
    "quick": (1.0, ["er", "est", "ly"]),
    "quiet": (1.2, ["er", "est", "ly"]),
    "radiant": (2.3, ["ly"]),
    "recommend": (1.9, ["s", "ed", "ing", "ation", "ations"]),
    "refresh": (1.6, ["es", "ed", "ing"]),
    "relax": (1.8, ["es", "ed", "ing", "ation"]),
    "reliable": (1.7, []),
    "reliably": (1.5, []),
    "remarkable": (2.3, []),
    "remarkably": (2.1, []),
    "respect": (1.8, ["s", "ed", "ful", "fully"]),
    "responsive": (1.7, ["ness"]),
    "restful": (1.7, []),
    "rich": (1.5, ["er", "est", "ly"]),
    "right": (1.0, []),
    "roomy": (1.4, []),
    "safe": (1.5, ["r", "st", "ly", "ty"]),
    "satisfaction": (1.9, []),
    "satisfactory": (1.4, []),
    "satisfy": (1.7, ["ing"]),
    "satisfied": (1.9, []),
    "scenic": (1.9, []),
    "seamless": (1.8, ["ly"]),
    "secure": (1.4, ["ly", "d"]),
    "serene": (2.1, ["ly"]),
    "serenity": (2.0, []),
    "sincere": (1.7, ["ly"]),
    "smart": (1.6, ["er", "est", "ly"]),
    "smile": (2.0, ["s", "d"]),
    "smiling": (2.1, []),
    "smooth": (1.4, ["er", "est", "ly"]),
    "snug": (1.5, []),
    "soothing": (1.8, ["ly"]),
    "sparkle": (1.9, ["s", "d"]),
    "sparkling": (2.0, []),
    "special": (1.7, ["ly"]),
    "spectacular": (2.7, ["ly"]),
    "splendid": (2.6, ["ly"]),
    "spotless": (2.4, ["ly"]),
    "spacious": (1.9, ["ly"]),
    "stellar": (2.4, []),
    "strong": (1.5, ["er", "est", "ly"]),
    "stunning": (2.8, ["ly"]),
    "stylish": (1.7, ["ly"]),
    "sublime": (2.4, []),
    "succeed": (1.8, ["s", "ed", "ing"]),
    "success": (2.1, ["es", "ful", "fully"]),
    "sunny": (1.7, []),
    "super": (2.1, []),
    "superb": (2.7, ["ly"]),
    "superior": (1.9, []),
    "support": (1.3, ["s", "ed", "ive"]),
    "sweet": (2.0, ["er", "est", "ly", "ness"]),
    "terrific": (2.4, ["ally"]),
    "thank": (1.7, ["s", "ed", "ful", "fully"]),
    "thoughtful": (2.0, ["ly", "ness"]),
    "thrill": (1.9, ["s", "ed", "ing"]),
    "thrilling": (2.1, []),
    "tidy": (1.5, []),
    "top-notch": (2.5, []),
    "tranquil": (2.0, ["ity"]),
    "treasure": (2.2, ["s", "d"]),
    "treat": (1.4, ["s", "ed"]),
    "triumph": (2.3, ["s", "ant"]),
    "trust": (1.7, ["s", "ed", "ing", "worthy"]),
    "unbeatable": (2.3, []),
    "unforgettable": (2.2, []),
    "unique": (1.3, ["ly"]),
    "upbeat": (1.7, []),
    "useful": (1.4, ["ly", "ness"]),
    "valuable": (1.6, []),
    "value": (1.2, ["s", "d"]),
    "vibrant": (1.8, ["ly"]),
    "victorious": (2.3, ["ly"]),
    "victory": (2.4, []),
    "warm": (1.7, ["er", "est", "ly", "th"]),
    "welcome": (1.9, ["s", "d"]),
    "welcoming": (2.1, []),
    "well": (1.1, []),
    "win": (2.0, ["s", "ning", "ner", "ners"]),
    "wonder": (1.5, ["s", "ed"]),
    "wonderful": (2.7, ["ly"]),
    "worthy": (1.5, []),
    "wow": (2.5, []),
    "yay": (2.4, []),
    "zen": (1.6, []),
}

NEGATIVE = {
    "abandon": (-1.9, ["s", "ed", "ing", "ment"]),
    "abominable": (-3.0, []),
    "abuse": (-2.8, ["s", "d", "ive"]),
    "abysmal": (-3.0, ["ly"]),
    "afraid": (-2.0, []),
    "aggravate": (-2.0, ["s", "d", "ing"]),
    "aggressive": (-1.7, ["ly"]),
    "agony": (-3.0, []),
    "alarm": (-1.4, ["s", "ed", "ing"]),
    "alarming": (-1.8, ["ly"]),
    "anger": (-2.3, ["s", "ed"]),
    "angry": (-2.3, []),
    "angrily": (-2.2, []),
    "annoy": (-1.8, ["s", "ed", "ing", "ance"]),
    "annoying": (-2.0, ["ly"]),
    "anxious": (-1.5, ["ly"]),
    "apathetic": (-1.2, []),
    "appalling": (-2.7, ["ly"]),
    "atrocious": (-3.0, ["ly"]),
    "awful": (-2.8, ["ly"]),
    "awkward": (-1.3, ["ly"]),
    "bad": (-2.5, ["ly"]),
    "worse": (-2.6, []),
    "worst": (-3.1, []),
    "bland": (-1.0, []),
    "bleak": (-1.9, ["ly"]),
    "boring": (-1.5, ["ly"]),
    "broke": (-1.4, []),
    "broken": (-1.8, []),
    "brutal": (-2.6, ["ly"]),
    "buggy": (-1.6, []),
    "bummer": (-1.8, []),
    "catastrophe": (-2.9, ["s"]),
    "catastrophic": (-3.0, ["ally"]),
    "cheap": (-0.9, ["ly"]),
    "cheat": (-2.3, ["s", "ed", "ing", "er"]),
    "chaos": (-2.0, []),
    "chaotic": (-2.0, []),
    "cold": (-0.8, ["er", "est"]),
    "complain": (-1.6, ["s", "ed", "ing", "t", "ts"]),
    "con": (-1.5, ["s", "ned"]),
    "concern": (-1.0, ["s", "ed", "ing"]),
    "condemn": (-2.2, ["s", "ed"]),
    "confuse": (-1.3, ["s", "d"]),
    "confusing": (-1.4, ["ly"]),
    "cramped": (-1.5, []),
    "crap": (-2.4, ["py"]),
    "crash": (-1.6, ["es", "ed", "ing"]),
    "creepy": (-2.0, []),
    "crime": (-2.3, ["s", "inal"]),
    "crisis": (-2.3, []),
    "critical": (-1.2, ["ly"]),
    "cruel": (-2.7, ["ly", "ty"]),
    "crumbling": (-1.6, []),
    "cry": (-1.6, ["ing"]),
    "damage": (-1.9, ["s", "d", "ing"]),
    "damp": (-1.0, []),
    "danger": (-2.2, ["s", "ous", "ously"]),
    "dark": (-0.8, ["er", "est"]),
    "dead": (-2.8, ["ly"]),
    "deceive": (-2.2, ["s", "d"]),
    "deceptive": (-2.1, ["ly"]),
    "defect": (-1.8, ["s", "ive"]),
    "deficient": (-1.5, []),
    "degrade": (-1.9, ["s", "d"]),
    "delay": (-1.2, ["s", "ed", "ing"]),
    "deplorable": (-2.8, []),
    "depress": (-2.2, ["es", "ed", "ing", "ion"]),
    "depressing": (-2.3, ["ly"]),
    "despair": (-2.6, ["ing"]),
    "desperate": (-2.0, ["ly"]),
    "despise": (-2.6, ["s", "d"]),
    "destroy": (-2.5, ["s", "ed", "ing"]),
    "destruction": (-2.4, []),
    "dirt": (-1.3, []),
    "dirty": (-2.1, []),
    "disagreeable": (-1.8, []),
    "disappoint": (-2.2, ["s", "ed", "ing", "ment", "ments"]),
    "disappointing": (-2.3, ["ly"]),
    "disaster": (-2.9, ["s"]),
    "disastrous": (-2.9, ["ly"]),
    "discomfort": (-1.7, []),
    "disgrace": (-2.4, ["ful", "fully"]),
    "disgust": (-2.7, ["s", "ed"]),
    "disgusting": (-2.9, ["ly"]),
    "dishonest": (-2.3, ["ly", "y"]),
    "dislike": (-1.7, ["s", "d"]),
    "dismal": (-2.3, ["ly"]),
    "disorganized": (-1.5, []),
    "disrespect": (-2.1, ["s", "ed", "ful", "fully"]),
    "dissatisfied": (-2.0, []),
    "distress": (-2.1, ["ed", "ing"]),
    "disturb": (-1.8, ["s", "ed", "ing"]),
    "disturbing": (-2.1, ["ly"]),
    "doom": (-2.3, ["ed"]),
    "doubt": (-1.2, ["s", "ed", "ful"]),
    "drab": (-1.3, []),
    "dread": (-2.2, ["s", "ed", "ful", "fully"]),
    "dreadful": (-2.7, ["ly"]),
    "dreary": (-1.8, []),
    "dump": (-1.7, ["s", "ed", "y"]),
    "dull": (-1.3, ["er", "est"]),
    "dysfunctional": (-1.8, []),
    "eerie": (-1.4, []),
    "embarrass": (-1.8, ["es", "ed", "ing", "ment"]),
    "enrage": (-2.6, ["s", "d"]),
    "error": (-1.5, ["s"]),
    "evil": (-3.1, []),
    "exhaust": (-1.5, ["s", "ed", "ing"]),
    "expensive": (-1.0, []),
    "fail": (-2.1, ["s", "ed", "ing", "ure", "ures"]),
    "fake": (-1.8, ["s", "d"]),
    "fault": (-1.6, ["s", "y"]),
    "fear": (-2.1, ["s", "ed", "ful", "fully"]),
    "fiasco": (-2.3, []),
    "filth": (-2.4, []),
    "filthy": (-2.6, []),
    "flaw": (-1.6, ["s", "ed"]),
    "fool": (-1.7, ["s", "ed", "ish", "ishly"]),
    "forget": (-1.0, ["s", "ting"]),
    "forgot": (-1.1, []),
    "fraud": (-2.6, ["s", "ulent"]),
    "freezing": (-1.4, []),
    "frighten": (-2.1, ["s", "ed", "ing"]),
    "frustrate": (-2.0, ["s", "d", "ing"]),
    "frustrating": (-2.1, ["ly"]),
    "frustration": (-2.0, []),
    "furious": (-2.6, ["ly"]),
    "garbage": (-2.1, []),
    "ghastly": (-2.6, []),
    "gloomy": (-1.8, []),
    "grief": (-2.5, []),
    "grim": (-2.0, ["ly"]),
    "grime": (-1.8, []),
    "grimy": (-1.9, []),
    "gross": (-2.1, ["ly"]),
    "gruesome": (-2.6, []),
    "harass": (-2.4, ["es", "ed", "ment"]),
    "harm": (-2.0, ["s", "ed", "ful", "fully"]),
    "harsh": (-1.8, ["ly"]),
    "hate": (-2.7, ["s", "d", "ful"]),
    "hating": (-2.5, []),
    "hatred": (-2.9, []),
    "hazard": (-1.8, ["s", "ous"]),
    "heartbreaking": (-2.6, []),
    "heartless": (-2.4, ["ly"]),
    "hell": (-2.7, ["ish"]),
    "helpless": (-1.9, ["ly"]),
    "hideous": (-2.7, ["ly"]),
    "hopeless": (-2.3, ["ly", "ness"]),
    "horrendous": (-3.0, ["ly"]),
    "horrible": (-2.8, []),
    "horribly": (-2.7, []),
    "horrid": (-2.7, []),
    "horrific": (-3.0, ["ally"]),
    "horror": (-2.8, ["s"]),
    "hostile": (-2.2, []),
    "humiliate": (-2.4, ["s", "d"]),
    "hurt": (-2.1, ["s", "ing", "ful"]),
    "ignorant": (-1.8, ["ly"]),
    "ignore": (-1.4, ["s", "d"]),
    "inadequate": (-1.7, ["ly"]),
    "incompetent": (-2.2, ["ly"]),
    "inconsiderate": (-1.9, []),
    "inconvenient": (-1.5, ["ly"]),
    "inconvenience": (-1.5, ["s", "d"]),
    "inexcusable": (-2.3, []),
    "inferior": (-1.8, []),
    "infest": (-2.4, ["ed", "ation"]),
    "infuriating": (-2.5, []),
    "insect": (-1.0, ["s"]),
    "insult": (-2.2, ["s", "ed", "ing"]),
    "intolerable": (-2.3, []),
    "irritate": (-1.9, ["s", "d", "ing"]),
    "irritating": (-2.0, ["ly"]),
    "junk": (-1.6, ["y"]),
    "lame": (-1.6, []),
    "lazy": (-1.4, []),
    "leak": (-1.3, ["s", "ed", "ing", "y"]),
    "lie": (-2.0, ["s", "d"]),
    "liar": (-2.4, ["s"]),
    "lonely": (-1.7, []),
    "loss": (-1.6, ["es"]),
    "lost": (-1.4, []),
    "loud": (-0.9, ["er", "est", "ly"]),
    "lousy": (-2.1, []),
    "mad": (-2.0, ["ly", "ness"]),
    "mediocre": (-1.3, []),
    "mess": (-1.5, ["es", "ed", "y"]),
    "miserable": (-2.6, []),
    "miserably": (-2.5, []),
    "misery": (-2.6, []),
    "mislead": (-2.0, ["s", "ing"]),
    "misrepresent": (-2.0, ["s", "ed", "ation"]),
    "mistake": (-1.6, ["s", "n"]),
    "mold": (-1.7, ["y"]),
    "mourn": (-2.2, ["s", "ing", "ful"]),
    "nasty": (-2.5, []),
    "negative": (-1.6, ["ly"]),
    "neglect": (-2.0, ["s", "ed", "ful"]),
    "nightmare": (-2.7, ["s"]),
    "noise": (-1.1, ["s"]),
    "noisy": (-1.6, []),
    "obnoxious": (-2.3, ["ly"]),
    "offend": (-2.0, ["s", "ed", "ing"]),
    "offensive": (-2.2, ["ly"]),
    "outdated": (-1.2, []),
    "outrage": (-2.4, ["d", "ous", "ously"]),
    "overpriced": (-1.8, []),
    "pain": (-2.1, ["s", "ed", "ful", "fully"]),
    "panic": (-2.1, ["s", "ked"]),
    "pathetic": (-2.4, ["ally"]),
    "pest": (-1.6, ["s"]),
    "pitiful": (-2.1, ["ly"]),
    "pity": (-1.4, []),
    "poor": (-1.9, ["ly"]),
    "problem": (-1.5, ["s", "atic"]),
    "rage": (-2.6, ["s"]),
    "rat": (-1.5, ["s"]),
    "regret": (-1.9, ["s", "ted", "table", "fully"]),
    "reject": (-1.8, ["s", "ed", "ion"]),
    "repulsive": (-2.7, []),
    "resent": (-2.0, ["s", "ed", "ment"]),
    "revolting": (-2.6, []),
    "ridiculous": (-1.9, ["ly"]),
    "roach": (-2.1, ["es"]),
    "rot": (-2.0, ["s", "ten", "ting"]),
    "rough": (-1.3, ["ly"]),
    "rude": (-2.2, ["ly", "ness"]),
    "rudest": (-2.5, []),
    "ruin": (-2.3, ["s", "ed", "ing"]),
    "run-down": (-1.8, []),
    "sad": (-2.1, ["ly", "ness"]),
    "scam": (-2.6, ["s", "med", "mer"]),
    "scare": (-1.9, ["s", "d"]),
    "scary": (-2.0, []),
    "shabby": (-1.8, []),
    "shame": (-2.1, ["ful", "fully", "less"]),
    "shock": (-1.5, ["s", "ed", "ing"]),
    "shocking": (-1.8, ["ly"]),
    "shoddy": (-2.1, []),
    "sick": (-1.8, ["ening"]),
    "sketchy": (-1.7, []),
    "sloppy": (-1.7, []),
    "slow": (-1.0, ["er", "est", "ly"]),
    "smell": (-1.2, ["s", "ed", "y"]),
    "sorrow": (-2.2, ["s", "ful"]),
    "sorry": (-0.9, []),
    "stain": (-1.5, ["s", "ed"]),
    "stale": (-1.4, []),
    "stench": (-2.3, []),
    "stink": (-2.0, ["s", "ing", "y"]),
    "stress": (-1.7, ["ed", "ful"]),
    "struggle": (-1.6, ["s", "d"]),
    "stupid": (-2.2, ["ly", "ity"]),
    "subpar": (-1.6, []),
    "suck": (-2.0, ["s", "ed"]),
    "suffer": (-2.2, ["s", "ed", "ing"]),
    "suspicious": (-1.6, ["ly"]),
    "terrible": (-2.9, []),
    "terribly": (-2.8, []),
    "terror": (-2.9, []),
    "theft": (-2.3, []),
    "thief": (-2.3, []),
    "threat": (-2.0, ["s", "ening"]),
    "tragic": (-2.9, ["ally"]),
    "trash": (-1.8, ["y"]),
    "trouble": (-1.6, ["s", "d", "some"]),
    "ugly": (-2.2, []),
    "unacceptable": (-2.2, []),
    "unbearable": (-2.4, []),
    "unclean": (-1.9, []),
    "uncomfortable": (-1.9, []),
    "unfair": (-1.9, ["ly"]),
    "unfortunate": (-1.7, ["ly"]),
    "unfriendly": (-1.9, []),
    "unhappy": (-2.1, []),
    "unhelpful": (-1.7, []),
    "unpleasant": (-2.0, ["ly"]),
    "unprofessional": (-1.9, []),
    "unreliable": (-1.8, []),
    "unsafe": (-2.0, []),
    "unsanitary": (-2.2, []),
    "untrustworthy": (-2.1, []),
    "unusable": (-1.9, []),
    "upset": (-1.9, ["ting"]),
    "useless": (-1.9, ["ly"]),
    "vermin": (-2.3, []),
    "vile": (-2.8, []),
    "violent": (-2.6, ["ly"]),
    "warn": (-1.1, ["s", "ed", "ing", "ings"]),
    "waste": (-1.8, ["s", "d", "ful"]),
    "weak": (-1.3, ["er", "est", "ly", "ness"]),
    "weep": (-1.9, ["s", "ing"]),
    "wet": (-0.7, []),
    "whine": (-1.4, ["s", "d"]),
    "wicked": (-2.4, ["ly"]),
    "worn": (-1.1, []),
    "worry": (-1.6, ["ing"]),
    "worried": (-1.7, []),
    "wreck": (-2.1, ["s", "ed"]),
    "wrong": (-1.7, ["ly"]),
}

# Low-magnitude odds and ends that round out coverage.
MILD = {
    "ok": 0.9, "okay": 0.9, "fine-ish": 0.3, "meh": -0.7, "average": 0.1,
    "basic": -0.3, "plain": -0.2, "simple": 0.4, "standard": 0.2,
    "small": -0.4, "tiny": -0.6, "big": 0.4, "huge": 0.6, "vast": 0.5,
    "old": -0.5, "new": 0.9, "newer": 0.8, "newest": 0.9, "aged": -0.4,
    "cheaper": -0.3, "pricey": -0.8, "bargain": 1.3, "deal": 0.9,
    "steal": 1.1, "fineprint": -0.6, "surprise": 0.8, "surprised": 0.7,
    "surprising": 0.6, "surprisingly": 0.5, "curious": 0.5, "odd": -0.6,
    "strange": -0.8, "weird": -0.9, "quirky": 0.3, "funky": 0.4,
    "interest": 0.7, "interested": 0.8, "bugs": -1.5, "bug": -1.3,
    "spider": -0.8, "spiders": -0.9, "ant": -0.4, "ants": -0.7,
    "mosquito": -1.0, "mosquitoes": -1.1, "traffic": -0.9, "crowded": -1.0,
    "crowds": -0.7, "busy": -0.3, "walkable": 1.2, "central": 0.8,
    "downtown": 0.3, "nearby": 0.6, "close": 0.5, "far": -0.5,
    "accessible": 1.0, "parking": 0.2, "view": 0.9, "views": 1.0,
    "sunset": 1.2, "sunrise": 1.1, "pool": 0.8, "hot-tub": 1.0,
    "backyard": 0.5, "patio": 0.5, "porch": 0.4, "garden": 0.8,
    "renovated": 1.1, "updated": 0.9, "upgraded": 1.0, "dated": -0.9,
    "rustic": 0.3, "vintage": 0.4, "classic": 0.7, "historic": 0.6,
}


def expand(stem: str, valence: float, inflections: list[str]):
    yield stem, valence
    for suffix in inflections:
        if suffix in ("r", "st", "d") and stem.endswith("e"):
            yield stem + suffix, valence
        elif suffix == "ies" and stem.endswith("y"):
            yield stem[:-1] + "ies", valence
        elif suffix == "ly" and stem.endswith("y"):
            yield stem[:-1] + "ily", valence
        elif suffix == "ly" and stem.endswith("le"):
            yield stem[:-1] + "y", valence
        else:
            yield stem + suffix, valence


def build() -> dict[str, float]:
    lex: dict[str, float] = {}
    for table in (POSITIVE, NEGATIVE):
        for stem, (valence, infl) in table.items():
            for word, v in expand(stem, valence, infl):
                lex.setdefault(word.lower(), v)
    for word, v in MILD.items():
        lex.setdefault(word.lower(), v)
    lex.update(FIXED)
    return lex


def main() -> None:
    lex = build()
    lines = ["# word<TAB>valence; generated by scripts/build_lexicon.py"]
    for word in sorted(lex):
        lines.append(f"{word}\t{lex[word]}")
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lex)} entries to {OUT}")


if __name__ == "__main__":
    main()

#include "amrize/lemmatizer.hpp"

#include <unordered_map>

namespace amrize {

// Irregular-form exception table consulted before (and between) suffix
// rules. Three kinds of entries:
//   * irregular inflections (went -> go, children -child, better -> good),
//   * frequent forms the suffix rules would mangle (movies -> movie),
//   * self-maps that pin words the rules must not touch (news -> news).
// Keys are lower case; every value is itself a fixpoint of the lemmatizer
// (asserted by the unit tests).
const std::unordered_map<std::string, std::string>& lemma_exceptions() {
  static const std::unordered_map<std::string, std::string> table = {
      // be / have / do / go / say
      {"am", "be"},
      {"is", "be"},
      {"are", "be"},
      {"was", "be"},
      {"were", "be"},
      {"been", "be"},
      {"being", "be"},
      {"has", "have"},
      {"had", "have"},
      {"having", "have"},
      {"does", "do"},
      {"did", "do"},
      {"done", "do"},
      {"doing", "do"},
      {"goes", "go"},
      {"went", "go"},
      {"gone", "go"},
      {"going", "go"},
      {"said", "say"},

      // irregular verb pasts and participles
      {"arose", "arise"},
      {"arisen", "arise"},
      {"ate", "eat"},
      {"awoke", "awake"},
      {"awoken", "awake"},
      {"beaten", "beat"},
      {"became", "become"},
      {"began", "begin"},
      {"begun", "begin"},
      {"bent", "bend"},
      {"bit", "bite"},
      {"bitten", "bite"},
      {"bled", "bleed"},
      {"blew", "blow"},
      {"blown", "blow"},
      {"bore", "bear"},
      {"born", "bear"},
      {"borne", "bear"},
      {"bought", "buy"},
      {"bound", "bind"},
      {"bred", "breed"},
      {"broke", "break"},
      {"broken", "break"},
      {"brought", "bring"},
      {"built", "build"},
      {"burnt", "burn"},
      {"came", "come"},
      {"caught", "catch"},
      {"chose", "choose"},
      {"chosen", "choose"},
      {"clung", "cling"},
      {"crept", "creep"},
      {"dealt", "deal"},
      {"dove", "dive"},
      {"drank", "drink"},
      {"drawn", "draw"},
      {"dreamt", "dream"},
      {"drew", "draw"},
      {"driven", "drive"},
      {"drove", "drive"},
      {"drunk", "drink"},
      {"dug", "dig"},
      {"dwelt", "dwell"},
      {"eaten", "eat"},
      {"fallen", "fall"},
      {"fed", "feed"},
      {"fell", "fall"},
      {"felt", "feel"},
      {"fled", "flee"},
      {"flew", "fly"},
      {"flown", "fly"},
      {"flung", "fling"},
      {"forbade", "forbid"},
      {"forbidden", "forbid"},
      {"forgave", "forgive"},
      {"forgiven", "forgive"},
      {"forgot", "forget"},
      {"forgotten", "forget"},
      {"fought", "fight"},
      {"found", "find"},
      {"froze", "freeze"},
      {"frozen", "freeze"},
      {"gave", "give"},
      {"given", "give"},
      {"got", "get"},
      {"gotten", "get"},
      {"grew", "grow"},
      {"grown", "grow"},
      {"heard", "hear"},
      {"held", "hold"},
      {"hid", "hide"},
      {"hidden", "hide"},
      {"hung", "hang"},
      {"kept", "keep"},
      {"knelt", "kneel"},
      {"knew", "know"},
      {"known", "know"},
      {"laid", "lay"},
      {"lain", "lie"},
      {"leapt", "leap"},
      {"learnt", "learn"},
      {"led", "lead"},
      {"left", "leave"},
      {"lent", "lend"},
      {"lit", "light"},
      {"lost", "lose"},
      {"made", "make"},
      {"meant", "mean"},
      {"met", "meet"},
      {"mistaken", "mistake"},
      {"mistook", "mistake"},
      {"overcame", "overcome"},
      {"overtaken", "overtake"},
      {"overtook", "overtake"},
      {"paid", "pay"},
      {"proven", "prove"},
      {"ran", "run"},
      {"rang", "ring"},
      {"ridden", "ride"},
      {"risen", "rise"},
      {"rode", "ride"},
      {"rose", "rise"},
      {"rung", "ring"},
      {"sang", "sing"},
      {"sank", "sink"},
      {"sat", "sit"},
      {"saw", "see"},
      {"seen", "see"},
      {"sent", "send"},
      {"sewn", "sew"},
      {"shaken", "shake"},
      {"shone", "shine"},
      {"shook", "shake"},
      {"shot", "shoot"},
      {"shown", "show"},
      {"shrank", "shrink"},
      {"shrunk", "shrink"},
      {"slain", "slay"},
      {"slept", "sleep"},
      {"slew", "slay"},
      {"slid", "slide"},
      {"slung", "sling"},
      {"sold", "sell"},
      {"sought", "seek"},
      {"sown", "sow"},
      {"spat", "spit"},
      {"spelt", "spell"},
      {"spent", "spend"},
      {"spilt", "spill"},
      {"spoilt", "spoil"},
      {"spoke", "speak"},
      {"spoken", "speak"},
      {"sprang", "spring"},
      {"sprung", "spring"},
      {"spun", "spin"},
      {"stank", "stink"},
      {"stole", "steal"},
      {"stolen", "steal"},
      {"stood", "stand"},
      {"stride", "stride"},
      {"striven", "strive"},
      {"strode", "stride"},
      {"strove", "strive"},
      {"struck", "strike"},
      {"stuck", "stick"},
      {"stung", "sting"},
      {"sung", "sing"},
      {"sunk", "sink"},
      {"swam", "swim"},
      {"swept", "sweep"},
      {"swollen", "swell"},
      {"swore", "swear"},
      {"sworn", "swear"},
      {"swum", "swim"},
      {"swung", "swing"},
      {"taken", "take"},
      {"taught", "teach"},
      {"threw", "throw"},
      {"thought", "think"},
      {"thrown", "throw"},
      {"told", "tell"},
      {"took", "take"},
      {"tore", "tear"},
      {"torn", "tear"},
      {"trod", "tread"},
      {"undergone", "undergo"},
      {"undertaken", "undertake"},
      {"undertook", "undertake"},
      {"understood", "understand"},
      {"underwent", "undergo"},
      {"withdrawn", "withdraw"},
      {"withdrew", "withdraw"},
      {"woke", "wake"},
      {"woken", "wake"},
      {"won", "win"},
      {"wore", "wear"},
      {"worn", "wear"},
      {"wove", "weave"},
      {"woven", "weave"},
      {"wept", "weep"},
      {"written", "write"},
      {"wrote", "write"},

      // irregular noun plurals
      {"analyses", "analysis"},
      {"appendices", "appendix"},
      {"bacteria", "bacterium"},
      {"businessmen", "businessman"},
      {"calves", "calf"},
      {"chairmen", "chairman"},
      {"children", "child"},
      {"congressmen", "congressman"},
      {"craftsmen", "craftsman"},
      {"crises", "crisis"},
      {"criteria", "criterion"},
      {"curricula", "curriculum"},
      {"diagnoses", "diagnosis"},
      {"elves", "elf"},
      {"feet", "foot"},
      {"fishermen", "fisherman"},
      {"freshmen", "freshman"},
      {"fungi", "fungus"},
      {"geese", "goose"},
      {"gentlemen", "gentleman"},
      {"grandchildren", "grandchild"},
      {"halves", "half"},
      {"hypotheses", "hypothesis"},
      {"indices", "index"},
      {"knives", "knife"},
      {"loaves", "loaf"},
      {"matrices", "matrix"},
      {"men", "man"},
      {"mice", "mouse"},
      {"nuclei", "nucleus"},
      {"oases", "oasis"},
      {"oxen", "ox"},
      {"parentheses", "parenthesis"},
      {"phenomena", "phenomenon"},
      {"policemen", "policeman"},
      {"radii", "radius"},
      {"salesmen", "salesman"},
      {"scarves", "scarf"},
      {"selves", "self"},
      {"shelves", "shelf"},
      {"spokesmen", "spokesman"},
      {"stimuli", "stimulus"},
      {"syntheses", "synthesis"},
      {"teeth", "tooth"},
      {"theses", "thesis"},
      {"thieves", "thief"},
      {"vertices", "vertex"},
      {"wives", "wife"},
      {"wolves", "wolf"},
      {"women", "woman"},

      // irregular comparatives and superlatives
      {"best", "good"},
      {"better", "good"},
      {"farther", "far"},
      {"further", "far"},
      {"worse", "bad"},
      {"worst", "bad"},

      // clitic tokens from treebank-style tokenization
      {"'ll", "will"},
      {"'m", "be"},
      {"'re", "be"},
      {"'ve", "have"},
      {"n't", "not"},

      // forms the suffix rules would strip incorrectly
      {"aches", "ache"},
      {"added", "add"},
      {"adding", "add"},
      {"agreed", "agree"},
      {"amazing", "amaze"},
      {"arranged", "arrange"},
      {"believed", "believe"},
      {"buses", "bus"},
      {"canoes", "canoe"},
      {"caused", "cause"},
      {"causing", "cause"},
      {"challenged", "challenge"},
      {"challenging", "challenge"},
      {"changed", "change"},
      {"changing", "change"},
      {"charged", "charge"},
      {"charging", "charge"},
      {"choosing", "choose"},
      {"compared", "compare"},
      {"comparing", "compare"},
      {"cookies", "cookie"},
      {"created", "create"},
      {"creating", "create"},
      {"damaged", "damage"},
      {"decided", "decide"},
      {"deciding", "decide"},
      {"declared", "declare"},
      {"described", "describe"},
      {"dying", "die"},
      {"emerged", "emerge"},
      {"emerging", "emerge"},
      {"emphasized", "emphasize"},
      {"encouraged", "encourage"},
      {"engaged", "engage"},
      {"exercised", "exercise"},
      {"experienced", "experience"},
      {"forced", "force"},
      {"forcing", "force"},
      {"freed", "free"},
      {"gases", "gas"},
      {"guaranteed", "guarantee"},
      {"headaches", "headache"},
      {"imagined", "imagine"},
      {"improved", "improve"},
      {"improving", "improve"},
      {"achieved", "achieve"},
      {"including", "include"},
      {"increased", "increase"},
      {"increasing", "increase"},
      {"introduced", "introduce"},
      {"involved", "involve"},
      {"involving", "involve"},
      {"lenses", "lens"},
      {"housing", "house"},
      {"licensed", "license"},
      {"lying", "lie"},
      {"managed", "manage"},
      {"managing", "manage"},
      {"merged", "merge"},
      {"movies", "movie"},
      {"noticed", "notice"},
      {"analyzed", "analyze"},
      {"analyzing", "analyze"},
      {"apologized", "apologize"},
      {"criticized", "criticize"},
      {"organized", "organize"},
      {"organizing", "organize"},
      {"pleased", "please"},
      {"praised", "praise"},
      {"purchased", "purchase"},
      {"realized", "realize"},
      {"realizing", "realize"},
      {"recognized", "recognize"},
      {"released", "release"},
      {"releasing", "release"},
      {"seized", "seize"},
      {"advised", "advise"},
      {"amazed", "amaze"},
      {"urged", "urge"},
      {"opened", "open"},
      {"opening", "open"},
      {"prepared", "prepare"},
      {"produced", "produce"},
      {"producing", "produce"},
      {"promised", "promise"},
      {"provided", "provide"},
      {"providing", "provide"},
      {"quizzes", "quiz"},
      {"raised", "raise"},
      {"raising", "raise"},
      {"received", "receive"},
      {"receiving", "receive"},
      {"reduced", "reduce"},
      {"removed", "remove"},
      {"removing", "remove"},
      {"replaced", "replace"},
      {"required", "require"},
      {"requiring", "require"},
      {"served", "serve"},
      {"serving", "serve"},
      {"supposed", "suppose"},
      {"surprised", "surprise"},
      {"tying", "tie"},
      {"using", "use"},

      // self-maps: words whose surface form already is the lemma
      {"always", "always"},
      {"anything", "anything"},
      {"besides", "besides"},
      {"ceiling", "ceiling"},
      {"clothes", "clothes"},
      {"during", "during"},
      {"economics", "economics"},
      {"evening", "evening"},
      {"everything", "everything"},
      {"hundred", "hundred"},
      {"lens", "lens"},
      {"mathematics", "mathematics"},
      {"morning", "morning"},
      {"news", "news"},
      {"nothing", "nothing"},
      {"perhaps", "perhaps"},
      {"physics", "physics"},
      {"politics", "politics"},
      {"series", "series"},
      {"sometimes", "sometimes"},
      {"something", "something"},
      {"species", "species"},
      {"spring", "spring"},
      {"statistics", "statistics"},
      {"string", "string"},
      {"towards", "towards"},
      {"whereas", "whereas"},
  };
  return table;
}

std::size_t lemma_exception_count() { return lemma_exceptions().size(); }

bool lemma_exception_lookup(std::string_view form, std::string& lemma_out) {
  const auto& table = lemma_exceptions();
  auto it = table.find(std::string(form));
  if (it == table.end()) return false;
  lemma_out = it->second;
  return true;
}

}  // namespace amrize

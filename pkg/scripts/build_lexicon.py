#!/usr/bin/env python3
"""Regenerate the shipped tagger lexicon and irregular-lemma table.

Writes src/ontoeg/data/lexicon.tsv (surface<TAB>tag, one entry per surface)
and src/ontoeg/data/irregular_lemmas.tsv (surface<TAB>lemma). Surfaces are
stored case-sensitively: lowercase keys match any casing at lookup time,
capitalized keys (proper nouns, element symbols) match exactly.

Each lemma is curated into exactly one open class; collisions across lists
are a build error so the single-tag-per-surface contract stays honest.
"""

import sys
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "ontoeg" / "data"

# ---------------------------------------------------------------------------
# Closed classes (exact tags, no inflection)
# ---------------------------------------------------------------------------

CLOSED = {
    # determiners and quantifiers
    "the": "DT", "a": "DT", "an": "DT", "this": "DT", "these": "DT",
    "those": "DT", "each": "DT", "every": "DT", "all": "DT", "both": "DT",
    "some": "DT", "any": "DT", "no": "DT", "another": "DT", "either": "DT",
    "neither": "DT", "several": "DT",
    # possessive determiners (tagset has no PRP$; DT keeps chunking sane)
    "my": "DT", "your": "DT", "his": "DT", "its": "DT", "our": "DT",
    "their": "DT",
    # pronouns
    "i": "PRP", "you": "PRP", "he": "PRP", "she": "PRP", "it": "PRP",
    "we": "PRP", "they": "PRP", "me": "PRP", "him": "PRP", "her": "PRP",
    "us": "PRP", "them": "PRP", "myself": "PRP", "yourself": "PRP",
    "himself": "PRP", "herself": "PRP", "itself": "PRP", "ourselves": "PRP",
    "themselves": "PRP", "oneself": "PRP", "mine": "PRP", "yours": "PRP",
    "hers": "PRP", "ours": "PRP", "theirs": "PRP",
    # wh-words (tagset has no WRB; when/where/why/how go to RB below)
    "that": "WDT", "which": "WDT", "whose": "WDT", "who": "WP", "whom": "WP",
    "what": "WP",
    "there": "EX",
    "to": "TO",
    # coordination
    "and": "CC", "or": "CC", "but": "CC", "nor": "CC",
    # prepositions and subordinators
    "of": "IN", "in": "IN", "on": "IN", "at": "IN", "by": "IN", "with": "IN",
    "from": "IN", "for": "IN", "about": "IN", "as": "IN", "into": "IN",
    "onto": "IN", "over": "IN", "under": "IN", "between": "IN", "among": "IN",
    "through": "IN", "during": "IN", "without": "IN", "within": "IN",
    "against": "IN", "across": "IN", "after": "IN", "before": "IN",
    "around": "IN", "behind": "IN", "below": "IN", "beneath": "IN",
    "beside": "IN", "besides": "IN", "beyond": "IN", "near": "IN",
    "since": "IN", "toward": "IN", "towards": "IN", "upon": "IN", "via": "IN",
    "per": "IN", "than": "IN", "like": "IN", "if": "IN", "because": "IN",
    "although": "IN", "though": "IN", "while": "IN", "whereas": "IN",
    "unless": "IN", "until": "IN", "till": "IN", "despite": "IN",
    "throughout": "IN", "outside": "IN", "inside": "IN", "amid": "IN",
    "off": "IN", "up": "IN", "down": "IN", "out": "IN",
    # auxiliaries and modals (tagset has no MD; modals act as finite verbs)
    "be": "VB", "am": "VBP", "is": "VBZ", "are": "VBP", "was": "VBD",
    "were": "VBD", "been": "VBN", "being": "VBG",
    "have": "VBP", "has": "VBZ", "had": "VBD", "having": "VBG",
    "do": "VBP", "does": "VBZ", "did": "VBD", "done": "VBN", "doing": "VBG",
    "can": "VBP", "could": "VBP", "may": "VBP", "might": "VBP",
    "must": "VBP", "shall": "VBP", "should": "VBP", "will": "VBP",
    "would": "VBP", "cannot": "VBP",
    # verbalized ontology role
    "hasPart": "VBZ",
}

# ---------------------------------------------------------------------------
# Verbs (base forms; inflected below). One class per lemma: anything that
# reads better as a noun or adjective in science prose lives there instead.
# ---------------------------------------------------------------------------

VERBS = """
accept achieve acquire act adapt add adjust admit adopt advance affect
agree aim allow alter analyze announce answer appear apply argue arise
arrange arrive ask assemble assess assign assist associate assume attach
attain attend attract avoid bear beat become begin behave believe belong
bend bind bleed blow boil borrow bounce break breathe bring broadcast
bubble build burn bury buy calculate call carry catch cause change
characterize check choose circulate cite claim clarify classify climb
cling close collapse collect collide combine come communicate compare
compete compile complain compose compress compute conclude condense
conduct confirm confuse connect consider consist constitute construct
consume contain continue contract contribute control convert convey
convince cook copy correlate correspond corrode cost count cover crack
create cross crush cry cut deal decay decide declare decline decompose
decrease deduce define deform demonstrate denote deny depend depict
deposit derive describe deserve design designate destroy detect determine
develop differ diffuse dilute diminish disagree disappear discover discuss
displace display dissolve distill distinguish distribute disturb divide
dominate donate draw drink drive drop earn eat elaborate eliminate emerge
emit emphasize employ enable enclose encounter encourage end engage
enhance enjoy enlarge entail enter enumerate equip erode escape establish
evaluate evaporate evolve examine exceed exchange exclude exemplify exert
exhibit exist expand expect expel experience explain explode explore
expose express extend extract fade fail fall feed feel fill find finish
fit fix flee float flow fluctuate fly focus fold follow forbid forget form
fracture freeze fulfill gain gather generate get give glow go govern grab
grow guess handle hang happen hear help hide hit hold hope identify ignite
ignore illustrate imagine immerse imply improve include incorporate
increase indicate infer inform inhibit initiate inject insert insist
inspect install intend interact interfere interpret introduce invent
investigate invite involve ionize join jump justify keep kill know lack
learn leave lend let lie lift link live locate look lose love maintain
make manage manipulate match mean measure meet melt mention migrate mix
modify move multiply need neutralize note notice obey observe obtain
occupy occur offer omit operate oppose organize oscillate overcome overlap
owe oxidize participate pass pay penetrate perceive perform permit persist
pick place play plot point possess pour precede predict prefer prepare
prescribe preserve press prevent print proceed produce prolong promote
propose protect prove provide publish pull purify pursue push put quote
radiate raise reach react read realize rearrange receive recognize
recommend record recover reduce refer refine reflect regard regulate
reinforce relate release rely remain remember remind remove render repeat
replace require resemble resist resolve respond restore restrict retain
return reveal reverse revise ride ring rise rotate rub run rust satisfy
save say scan scatter search see seek seem select sell send serve set
settle shake share shift shine show shrink shut simplify simulate sing
sink sit situate sleep slide slip smell solidify solve speak specify spend
spill spin split spread stabilize stand start stay stick stir stop store
stretch strike struggle submit substitute subtract succeed suffer suggest
summarize supply support suppose surround survive suspend sustain swell
swim swing synthesize take talk teach tear tell tend thank think throw tie
touch transfer transform translate transmit trap travel treat tremble try
undergo underlie understand unify use utilize vanish vaporize vary verify
vibrate wait walk want wash watch wear weigh win wish wonder write yield
""".split()

# irregular verbs: lemma -> (past, past participle); None keeps the lemma
IRREGULAR_VERBS = {
    "arise": ("arose", "arisen"), "bear": ("bore", "borne"),
    "beat": ("beat", "beaten"), "become": ("became", "become"),
    "begin": ("began", "begun"), "bend": ("bent", "bent"),
    "bind": ("bound", "bound"), "bleed": ("bled", "bled"),
    "blow": ("blew", "blown"), "break": ("broke", "broken"),
    "bring": ("brought", "brought"), "broadcast": ("broadcast", "broadcast"),
    "build": ("built", "built"), "burn": ("burned", "burned"),
    "buy": ("bought", "bought"), "catch": ("caught", "caught"),
    "choose": ("chose", "chosen"), "cling": ("clung", "clung"),
    "come": ("came", "come"), "cost": ("cost", "cost"),
    "cut": ("cut", "cut"), "deal": ("dealt", "dealt"),
    "draw": ("drew", "drawn"), "drink": ("drank", "drunk"),
    "drive": ("drove", "driven"), "eat": ("ate", "eaten"),
    "fall": ("fell", "fallen"), "feed": ("fed", "fed"),
    "feel": ("felt", "felt"), "find": ("found", "found"),
    "fit": ("fit", "fit"), "flee": ("fled", "fled"),
    "fly": ("flew", "flown"), "forbid": ("forbade", "forbidden"),
    "forget": ("forgot", "forgotten"), "freeze": ("froze", "frozen"),
    "get": ("got", "gotten"), "give": ("gave", "given"),
    "go": ("went", "gone"), "grow": ("grew", "grown"), "hang": ("hung", "hung"),
    "hear": ("heard", "heard"), "hide": ("hid", "hidden"),
    "hit": ("hit", "hit"), "hold": ("held", "held"),
    "keep": ("kept", "kept"), "know": ("knew", "known"),
    "learn": ("learned", "learned"), "leave": ("left", "left"),
    "lend": ("lent", "lent"), "let": ("let", "let"),
    "lie": ("lay", "lain"), "lose": ("lost", "lost"),
    "make": ("made", "made"), "mean": ("meant", "meant"),
    "meet": ("met", "met"), "overcome": ("overcame", "overcome"),
    "pay": ("paid", "paid"), "prove": ("proved", "proven"),
    "put": ("put", "put"), "read": ("read", "read"),
    "ride": ("rode", "ridden"), "ring": ("rang", "rung"),
    "rise": ("rose", "risen"), "run": ("ran", "run"),
    "say": ("said", "said"), "see": ("saw", "seen"),
    "seek": ("sought", "sought"), "sell": ("sold", "sold"),
    "send": ("sent", "sent"), "set": ("set", "set"),
    "shake": ("shook", "shaken"), "shine": ("shone", "shone"),
    "show": ("showed", "shown"), "shrink": ("shrank", "shrunk"),
    "shut": ("shut", "shut"), "sing": ("sang", "sung"),
    "sink": ("sank", "sunk"), "sit": ("sat", "sat"),
    "sleep": ("slept", "slept"), "slide": ("slid", "slid"),
    "speak": ("spoke", "spoken"), "spend": ("spent", "spent"),
    "spill": ("spilled", "spilled"), "spin": ("spun", "spun"),
    "split": ("split", "split"), "spread": ("spread", "spread"),
    "stand": ("stood", "stood"), "stick": ("stuck", "stuck"),
    "strike": ("struck", "struck"), "swell": ("swelled", "swollen"),
    "swim": ("swam", "swum"), "swing": ("swung", "swung"),
    "take": ("took", "taken"), "teach": ("taught", "taught"),
    "tear": ("tore", "torn"), "tell": ("told", "told"),
    "think": ("thought", "thought"), "throw": ("threw", "thrown"),
    "undergo": ("underwent", "undergone"), "underlie": ("underlay", "underlain"),
    "understand": ("understood", "understood"), "wear": ("wore", "worn"),
    "win": ("won", "won"), "write": ("wrote", "written"),
}

# verbs that double the final consonant before -ed/-ing
DOUBLING = set("""
admit commit compress? drop emit fit grab omit overlap permit plot prefer
refer rub run scan slip spin stir stop submit swim trap trim
""".replace("?", "").split())

# ---------------------------------------------------------------------------
# Nouns (singular lemmas; pluralized below)
# ---------------------------------------------------------------------------

NOUNS_CHEMISTRY = """
acid alcohol aldehyde alkali alkane alkene alkyne alloy amide amine amount
anion anode apparatus atmosphere atom balance barometer battery beaker
bond bromide buffer burette burner calorimeter carbohydrate carbonate
catalyst cathode cation cell charge chemist chemistry chloride chlorophyll
chromatography circuit combustion composition compound concentration
condensation conductor configuration conservation correlation corrosion
crucible crystal cylinder decomposition density diffusion dilution dipole
dispersion displacement dissolution distillation dose droplet electricity
electrode electrolysis electrolyte electron electronegativity element
emission emulsion energy enthalpy entropy enzyme equation equilibrium
ester ether evaporation experiment explosion exponent filtrate filtration
flame flask fluid fluoride foam formula fraction frequency friction funnel
fusion gas glassware gradient gram hydrocarbon hydrolysis hydroxide
impurity indicator insulator interaction iodide ion ionization isotope
ketone kinetics lattice liquid litmus litre magnet magnitude mass matter
measurement membrane metal metalloid meter methodology microscope mineral
mixture molarity mole molecule momentum monomer neutralization neutron
nitrate nitride nonmetal nucleus orbital organism oxidation oxide particle
pendulum percentage periodicity peroxide phase phenomenon phosphate
pigment pipette plasma polarity polymer potential precipitate
precipitation pressure product proton purity radiation radius ratio
reactant reaction reagent reduction residue resistance salt sample
saturation sediment semiconductor shell solid solubility solute solution
solvent specimen spectrometer spectrum stoichiometry structure subscript
substance sulfate sulfide suspension symbol synthesis temperature tension
test-tube theory thermodynamics thermometer tissue titration transition
tube unit vacuum valence vapor velocity vessel viscosity voltage volume
wavelength weight
""".replace("?", "").split()

NOUNS_GENERAL = """
ability absence access accident account achievement action activity
addition address administration adult advantage advice age agency agent
agreement aid air aircraft airport album analogy analysis angle animal
announcement apartment appearance apple application approach april area
argument arm army arrangement array art article artist aspect assembly
assessment assignment assistance assumption atlas attempt attention
attitude audience august author authority autumn award awareness baby
background bag ball band bank bar barrier basis bath beach bean bed
bedroom beginning behavior belief bell belt bench benefit bicycle bill
bird birth birthday bit blood board boat body bone book border bottle
bottom boundary bowl box boy brain branch bread breakfast breath brick
bridge brother budget bus business butter button cabinet cake calendar
camera camp campaign campus candidate cap capacity capital captain car
card care career cart case cash cat category cattle ceiling celebration
center century ceremony chain chair chairman challenge chance channel
chapter character chart cheese chest chicken child choice church circle
circumstance citizen city civilization class classroom client climate
clock cloth clothes cloud club cluster coach coal coast coat code coffee
coin collection college colony color column combination comfort command
comment committee community company comparison competition complaint
complexity component computer concept concern conclusion condition
conference confidence conflict confusion congress connection consequence
consideration consistency construction consumer contact content contest
context contrast contribution conversation corn corner corpus cotton
council country county couple courage course court cousin cow craft cream
creature crew crime crisis criterion critic crop crowd culture cup curve
custom customer cycle dad damage dance danger darkness data date daughter
day death debate debt decade december decision defense definition degree
delay delivery demand department departure depth desire desk destination
detail device dictionary diet difference difficulty dimension dinner
direction director dirt disaster discipline discovery discussion disease
dish disk distance distribution district diversity division doctor
document dog dollar domain door doubt dozen draft drama drawer dream dress
driver dust duty ear earth east economy edge editor education effect
efficiency effort egg election electronics elite emergency emphasis
employee employer employment enemy engine engineer engineering enterprise
enthusiasm entrance entry environment episode equipment era error essay
essence estate estimate evening event evidence evolution exam examination
example excellence exception excitement exercise exhibition existence exit
expansion expectation expense expert explanation expression extension
extent eye face facility fact factor factory failure faith family fan farm
farmer fashion father fault fear feature february fee feedback fence
festival fever fiber fiction field fight figure file film filter finance
finger fire fish flag flavor flight floor flour flower fog food foot
football force forest fork fortune foundation fragment frame framework
freedom friend friendship front fruit fuel fun function fund furniture
future gallery game gap garage garden gate gender generation gentleman
geography gesture gift girl glance glass goal gold government grade
graduate grain grammar grandfather grandmother grant graph grass ground
group growth guard guest guide guideline guitar gun guy habit hair half
hall hand harbor harm hat head health heart heat hero highway hill hint
history hole holiday home homework honey honor horizon horse hospital host
hotel hour house household housing humor husband hypothesis ice idea
identity image imagination impact importance impression improvement
incident income independence index industry inflation influence
information ingredient initiative injury inn innovation input inquiry
insect insight inspection inspector instance institute institution
instruction instructor instrument insurance intention interest interior
interview introduction investment invitation iron island issue item
january job joke journal journey joy judge judgment juice july junction
june jury justice key keyboard kid kind king kitchen knee knife knowledge
lab label laboratory lady lake land landscape lane language laptop
laughter launch law lawyer layer leader leadership leaf league lecture leg
legend lemon length lesson letter level library license lid life lifetime
limit line list literature load loan location lock log logic loop loss lot
lunch machine magazine mail majority mall man management manager manner
map march margin mark market marriage master material mathematics matrix
maximum meal meat mechanism medicine medium member membership memory menu
mercy message metaphor method middle midnight mile milk mind minimum
minister minority minute mirror mission mistake mode model mom moment
monday money monitor month mood moon morning mother motion motivation
motor mountain mouse mouth movement movie mud muscle museum music musician
mystery myth name narrative nation nature neck neighbor neighborhood nerve
network news newspaper night noise noon north nose notebook nothing notion
novel november number nurse nutrition oak object objective obligation
observation occasion occupation ocean october office officer oil opening
operation operator opinion opportunity opposition option orange order
ordering organ organization orientation origin outcome outlet output oven
overview owner pace package page pain paint painting pair pan panel paper
paragraph parent park parking part participant participation partner party
passage passenger passion patent path patience patient pattern pause
payment peace peak pen penalty pencil pepper percent perception
performance period permission person personality perspective philosophy
phone photo photograph phrase physics piano picture piece pile pilot pin
pipe pitch pity plan plane planet plant plate platform player pleasure
plenty pocket poem poet poetry police policy politics pollution pool
population port portion position possession possibility post pot potato
pound poverty power practice praise prayer precision prediction preference
premise preparation presence president prestige price pride priest
principle printer priority prison privacy privilege prize probability
problem procedure process producer profession professor profile profit
program progress project promise promotion proof property proportion
proposal prospect protection protein protest psychology public publication
publisher purpose puzzle quality quantity quarter queen query quest
question queue quiz race radio rail rain range rank rate reader reality
reason recipe recognition recommendation recovery reference reflection
reform refrigerator region register regulation rejection relation
relationship relief religion remainder remark rent repair replacement
reply report reporter representation reputation request requirement rescue
research resident resource respect response responsibility rest restaurant
result retirement revenue review revolution reward rhythm rice risk river
road rock role roof room root rope routine row rubber rule rumor sake
salad salary sale sand sandwich satellite satisfaction saturday sauce
scale scenario scene schedule scheme scholarship school science scientist
scope score screen script sea season seat second secretary section sector
security seed segment selection self semester seminar senate senator sense
sentence sequence series server service session setting shade shadow shape
shelf shelter ship shirt shock shoe shop shore shoulder sign signal
significance silence silver similarity singer sir sister site situation
size sketch skill skin sky slice slope smile smoke snow society sock
software soil soldier son song sort soul sound soup source south space
speaker specialist species speech speed spirit spite spoon sport spot
spring square stability stadium staff stage stair star state statement
station statistics status steam steel stem step stomach stone storage
storm story stranger strategy stream street strength stress string strip
stroke student studio study stuff style subject submission suburb success
suggestion suit summary summer sun sunday supermarket supper supplement
surface surgery surprise survey survival suspect switch sympathy symptom
system table tail talent tank target task taste tax taxi tea teacher team
technique technology teen telephone television tendency term terminal
territory text textbook texture theater theme thing thread threat throat
thumb thunder thursday ticket tide time tin tip title tobacco toe tomato
tone tongue tool tooth top topic tour tourist towel tower town toy track
trade tradition traffic train training transaction transformation
transport treatment tree trend trial triangle tribe trick trip truck trust
truth tuesday tune tunnel turn tutor twin type uncle union universe
university update upgrade usage user vacation valley value van variable
variation variety vegetable vehicle venture verb verdict verse version
victim victory video view village violence vision visit visitor vitamin
voice volunteer vote voyage wage wall war warning waste water wave way
weakness wealth weapon weather web wedding wednesday week weekend welcome
west wheat wheel width wife window wine winner winter wire wisdom witness
woman wood wool word work worker workshop world worry worth wound wrist
writer yard year youth zone
""".replace("?", "").split()

IRREGULAR_PLURALS = {
    "child": "children", "man": "men", "woman": "women", "person": "people",
    "foot": "feet", "tooth": "teeth", "mouse": "mice", "goose": "geese",
    "analysis": "analyses", "hypothesis": "hypotheses", "basis": "bases",
    "crisis": "crises", "thesis": "theses", "criterion": "criteria",
    "phenomenon": "phenomena", "nucleus": "nuclei", "radius": "radii",
    "formula": "formulas", "datum": "data", "medium": "media",
    "index": "indexes", "matrix": "matrices", "apparatus": "apparatus",
    "species": "species", "series": "series", "shelf": "shelves", "knife": "knives", "half": "halves",
    "wife": "wives", "self": "selves", "wolf": "wolves",
}

# nouns that never pluralize (mass nouns already doubling as plurals, etc.)
NO_PLURAL = set("""
advice air blood bread butter cash chemistry clothes coal coffee corn
cotton courage darkness data dirt dust economics electricity engineering
equipment evidence flour fog fun furniture glassware gold grammar grass
gravity happiness health heat homework honey housing humor ice information
iron juice justice kinetics knowledge laughter leaf leisure life luck
luggage mathematics matter meat mercy milk money mud music news nothing
nutrition oil oxygen patience peace pepper physics plenty poetry police
politics pollution poverty praise precision pride privacy progress
psychology rain respect rice rubber safety salt sand silence silver smoke
snow software soil soup spite staff statistics steam steel stoichiometry
stress stuff sugar sunshine sympathy tea thermodynamics thunder tobacco
traffic training transportation trust truth usage violence wealth weather
wheat wisdom wool
""".split())

# ---------------------------------------------------------------------------
# Adjectives and adverbs
# ---------------------------------------------------------------------------

ADJECTIVES = """
able abnormal absolute abstract abundant academic acceptable accurate
acidic active actual additional adequate administrative adverse aesthetic
afraid aggressive agricultural alcoholic alive alkaline alternative
amazing ambitious ample ancient angry annual anxious apparent appropriate
approximate aqueous artificial asleep atomic attractive automatic
available average aware awful bad bare basic beautiful big bitter black
blank blind blue bold brave brief bright brilliant broad brown busy calm
capable careful careless central certain challenging characteristic cheap
chemical chief chronic circular civil classic classical clean clear clever
clinical cognitive cold collective colonial colorful comfortable
commercial common comparable competitive complete complex complicated
comprehensive compulsory concrete confident conscious consecutive
conservative considerable consistent constant constitutional contemporary
continuous conventional cool cooperative correct corrosive costly covalent
crazy creative critical crucial crude cultural curious current curved cute
daily dangerous dark dead deaf dear decent decisive deep defective
definite deliberate delicate delicious democratic dense dependent
desperate detailed different difficult digital diplomatic direct dirty
disabled distant distinct diverse divine domestic dominant double dramatic
dry dual due dull dumb dynamic eager early eastern easy economic
educational effective efficient elastic elderly electric electrical
electronic elegant elementary eligible emotional empirical empty endless
enormous entire environmental equal equivalent essential eternal ethical
ethnic evident exact excellent exceptional excessive exclusive exotic
expensive experimental explicit explosive external extra extraordinary
extreme fair faithful false famous fancy fast fat fatal favorable favorite
federal fellow female few final financial fine firm first fiscal flammable
flat flexible fond foreign formal former fortunate forward fragile free
frequent fresh friendly full fundamental funny general generous genetic
gentle genuine geographic giant glad global golden good gradual grand
grateful gray great green gross guilty handsome happy hard harmful harsh
healthy heavy helpful helpless high historic historical hollow holy honest
horizontal hostile hot huge human humble hungry ideal identical ill
illegal imaginary immediate immense imminent impatient imperial implicit
important impossible impressive impure incredible independent indirect
individual indoor industrial inert inevitable infinite influential
informal inherent initial inner innocent inorganic insoluble instant
institutional intact intellectual intelligent intense intensive
interesting intermediate internal international intimate invisible ionic
irregular joint junior keen large late latter lazy leading legal
legitimate lengthy lesser liable liberal light likely limited linear
literary little lively local logical lone lonely long loose loud low loyal
lucky mad magnetic main major male mandatory manual many marginal marine
married massive mature meaningful mechanical medical medieval mental mere
metallic metric mid mild military minimal minor mobile moderate modern
modest molecular molten moral more most mountainous much multiple
municipal mutual mysterious naked narrow national native natural naval
nearby neat necessary negative nervous neutral new next nice noble
nonmetallic normal northern notable nuclear numerous obvious occasional
odd odorless official old open opposite optical optimistic oral ordinary
organic organizational original other outdoor outer outstanding overall
overseas own painful pale parallel partial particular passive past
peaceful peculiar perfect permanent persistent personal physical pink
plain plastic pleasant poisonous polar polite political poor popular
porous portable positive possible potent powerful practical precious
precise pregnant preliminary premium present previous primary prime
principal prior private probable productive professional profound
prominent prompt proper proud provincial psychological pure purple
qualitative quantitative quick quiet radical radioactive random rapid rare
rational raw ready real realistic rear reasonable recent red regional
regular relative relevant reliable religious remarkable remote
representative reproductive resistant respective responsible retail rich
right rigid ripe rival romantic rough round royal rural sacred sad safe
salty same scarce scientific secondary secret secure selective senior
sensible sensitive separate serious severe shallow sharp sheer short shy
sick significant silent silly similar simple single singular slight slow
small smart smooth social soft solar sole solitary sophisticated sore
sorry sour southern spare spatial special specific spectacular spiritual
stable standard static statistical steady steep sticky stiff straight
strange strategic strict strong structural stupid subsequent substantial
subtle successful such sudden sufficient suitable sunny super superb
superior supreme sure surplus surprising suspicious sweet swift symbolic
synthetic systematic tall technical technological temporary tender
tentative terrible tertiary theoretical thermal thick thin third thirsty
thorough tight tiny tired total tough toxic traditional tragic transparent
tremendous tropical true typical ugly ultimate unable uncertain unclear
uncomfortable underground unequal unexpected unfair unhappy uniform unique
universal unknown unlikely unpleasant unstable unusual upper upset urban
urgent useful useless usual vague vain valid valuable vast verbal vertical
viable violent virtual visible visual vital vivid volatile voluntary
vulnerable warm weak wealthy weird western wet white whole wide wild
willing wise wonderful wooden worthy wrong yellow young
""".replace("?", "").split()

ADVERBS = """
abroad again ago ahead almost alone already also altogether always anyway
apart aside away back backward barely elsewhere even ever everywhere
exactly fairly far finally forever forth fully furthermore hardly hence
here how however indeed instead just lately later least less likewise
maybe meanwhile merely moreover n't nearly never nevertheless nonetheless
not now nowadays nowhere often once only otherwise overnight perhaps
pretty quite rarely rather seldom seriously so sometimes somewhat
somewhere soon still then thereby therefore thus today together tomorrow
tonight too twice unfortunately usually very well when whenever where
wherever why yesterday yet
""".replace("?", "").split()

CARDINALS = """
zero one two three four five six seven eight nine ten eleven twelve
thirteen fourteen fifteen sixteen seventeen eighteen nineteen twenty
thirty forty fifty sixty seventy eighty ninety hundred thousand million
billion trillion
""".split()

# ---------------------------------------------------------------------------
# Chemistry proper names: elements (name + symbol) and common substances
# ---------------------------------------------------------------------------

ELEMENTS = [
    ("hydrogen", "H"), ("helium", "He"), ("lithium", "Li"),
    ("beryllium", "Be"), ("boron", "B"), ("carbon", "C"), ("nitrogen", "N"),
    ("oxygen", "O"), ("fluorine", "F"), ("neon", "Ne"), ("sodium", "Na"),
    ("magnesium", "Mg"), ("aluminium", "Al"), ("silicon", "Si"),
    ("phosphorus", "P"), ("sulfur", "S"), ("chlorine", "Cl"),
    ("argon", "Ar"), ("potassium", "K"), ("calcium", "Ca"),
    ("scandium", "Sc"), ("titanium", "Ti"), ("vanadium", "V"),
    ("chromium", "Cr"), ("manganese", "Mn"), ("iron", "Fe"),
    ("cobalt", "Co"), ("nickel", "Ni"), ("copper", "Cu"), ("zinc", "Zn"),
    ("gallium", "Ga"), ("germanium", "Ge"), ("arsenic", "As"),
    ("selenium", "Se"), ("bromine", "Br"), ("krypton", "Kr"),
    ("rubidium", "Rb"), ("strontium", "Sr"), ("yttrium", "Y"),
    ("zirconium", "Zr"), ("niobium", "Nb"), ("molybdenum", "Mo"),
    ("technetium", "Tc"), ("ruthenium", "Ru"), ("rhodium", "Rh"),
    ("palladium", "Pd"), ("silver", "Ag"), ("cadmium", "Cd"),
    ("indium", "In"), ("tin", "Sn"), ("antimony", "Sb"),
    ("tellurium", "Te"), ("iodine", "I"), ("xenon", "Xe"),
    ("caesium", "Cs"), ("barium", "Ba"), ("lanthanum", "La"),
    ("cerium", "Ce"), ("praseodymium", "Pr"), ("neodymium", "Nd"),
    ("promethium", "Pm"), ("samarium", "Sm"), ("europium", "Eu"),
    ("gadolinium", "Gd"), ("terbium", "Tb"), ("dysprosium", "Dy"),
    ("holmium", "Ho"), ("erbium", "Er"), ("thulium", "Tm"),
    ("ytterbium", "Yb"), ("lutetium", "Lu"), ("hafnium", "Hf"),
    ("tantalum", "Ta"), ("tungsten", "W"), ("rhenium", "Re"),
    ("osmium", "Os"), ("iridium", "Ir"), ("platinum", "Pt"),
    ("gold", "Au"), ("mercury", "Hg"), ("thallium", "Tl"), ("lead", "Pb"),
    ("bismuth", "Bi"), ("polonium", "Po"), ("astatine", "At"),
    ("radon", "Rn"), ("francium", "Fr"), ("radium", "Ra"),
    ("actinium", "Ac"), ("thorium", "Th"), ("protactinium", "Pa"),
    ("uranium", "U"), ("neptunium", "Np"), ("plutonium", "Pu"),
    ("americium", "Am"), ("curium", "Cm"), ("berkelium", "Bk"),
    ("californium", "Cf"), ("einsteinium", "Es"), ("fermium", "Fm"),
    ("mendelevium", "Md"), ("nobelium", "No"), ("lawrencium", "Lr"),
    ("rutherfordium", "Rf"), ("dubnium", "Db"), ("seaborgium", "Sg"),
    ("bohrium", "Bh"), ("hassium", "Hs"), ("meitnerium", "Mt"),
]

# symbols that shadow ordinary capitalized words are unsafe as exact keys
UNSAFE_SYMBOLS = {"As", "In", "At", "No", "Be", "He", "I", "Am", "Md", "Es"}

SUBSTANCES = """
Methane Ethane Propane Butane Pentane Hexane Heptane Octane Benzene
Toluene Ethanol Methanol Glycerol Acetone Ammonia Glucose Sucrose
Fructose Cellulose Acetylene Ethylene Propylene Naphthalene Phenol
Formaldehyde Chloroform Aspirin Caffeine Insulin Hemoglobin Quartz
Graphite Diamond Water Steam? Brine Bleach Vinegar Gypsum Limestone
""".replace("?", "").split()


def pluralize(noun):
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    if noun.endswith("o") and noun[-2:] not in ("oo", "eo", "io"):
        return noun + "es"
    return noun + "s"


def verb_forms(verb):
    """Return (3sg, past, participle, gerund) surfaces for a base verb."""
    if verb.endswith(("s", "x", "z", "ch", "sh", "o")):
        third = verb + "es"
    elif verb.endswith("y") and verb[-2] not in "aeiou":
        third = verb[:-1] + "ies"
    else:
        third = verb + "s"
    if verb in IRREGULAR_VERBS:
        past, part = IRREGULAR_VERBS[verb]
    elif verb.endswith("e"):
        past = part = verb + "d"
    elif verb.endswith("y") and verb[-2] not in "aeiou":
        past = part = verb[:-1] + "ied"
    elif verb in DOUBLING:
        past = part = verb + verb[-1] + "ed"
    else:
        past = part = verb + "ed"
    if verb.endswith("ie"):
        gerund = verb[:-2] + "ying"
    elif verb.endswith("e") and not verb.endswith(("ee", "oe", "ye")):
        gerund = verb[:-1] + "ing"
    elif verb in DOUBLING:
        gerund = verb + verb[-1] + "ing"
    else:
        gerund = verb + "ing"
    return third, past, part, gerund


def main():
    entries = {}
    collisions = []

    def put(surface, tag):
        if surface in entries:
            if entries[surface] != tag:
                collisions.append((surface, entries[surface], tag))
            return
        entries[surface] = tag

    for surface, tag in CLOSED.items():
        put(surface, tag)

    for verb in VERBS:
        third, past, part, gerund = verb_forms(verb)
        put(verb, "VBP")
        put(third, "VBZ")
        if past != verb:
            put(past, "VBD")
        if part not in (past, verb):
            put(part, "VBN")
        put(gerund, "VBG")

    for noun in NOUNS_CHEMISTRY + NOUNS_GENERAL:
        put(noun, "NN")
        plural = pluralize(noun)
        if noun not in NO_PLURAL and plural != noun:
            put(plural, "NNS")

    for adj in ADJECTIVES:
        put(adj, "JJ")
    for adv in ADVERBS:
        put(adv, "RB")
    for num in CARDINALS:
        put(num, "CD")

    for name, symbol in ELEMENTS:
        put(name, "NN")
        put(name.capitalize(), "NNP")
        if symbol not in UNSAFE_SYMBOLS:
            put(symbol, "NNP")
    for sub in SUBSTANCES:
        put(sub, "NNP")

    if collisions:
        for surface, old, new in sorted(collisions):
            print(f"collision: {surface}\t{old} vs {new}", file=sys.stderr)
        sys.exit(1)

    lex_path = DATA_DIR / "lexicon.tsv"
    with open(lex_path, "w", encoding="utf-8") as fh:
        for surface in sorted(entries):
            fh.write(f"{surface}\t{entries[surface]}\n")
    print(f"{lex_path}: {len(entries)} entries")

    # irregular lemma table: inflected surface -> base lemma
    irregular = {
        "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
        "been": "be", "being": "be", "has": "have", "had": "have",
        "having": "have", "does": "do", "did": "do", "done": "do",
        "doing": "do", "an": "a",
    }
    for verb, (past, part) in IRREGULAR_VERBS.items():
        irregular.setdefault(past, verb)
        irregular.setdefault(part, verb)
    for singular, plural in IRREGULAR_PLURALS.items():
        if plural != singular:
            irregular.setdefault(plural, singular)

    irr_path = DATA_DIR / "irregular_lemmas.tsv"
    with open(irr_path, "w", encoding="utf-8") as fh:
        for surface in sorted(irregular):
            fh.write(f"{surface}\t{irregular[surface]}\n")
    print(f"{irr_path}: {len(irregular)} entries")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Validate the 100-pair chemistry training set against the constraints
both entailment algorithms need, then (with --write) freeze it into
src/ontoeg/data/entailment_pairs.tsv.

Constraints checked:
  * exactly 50 E and 50 NE pairs
  * edit EDA: trained threshold lands in [5/13, 0.4), training
    accuracy >= 0.8, and Ex2/Ex3/Ex4 classify E/NE/NE
  * maxent EDA: training accuracy >= 0.8 and Ex2/Ex3/Ex4 classify E/NE/NE
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ontoeg import entailment as ent

EX2_T = "In chemical reactions with metals, nonmetals gain electrons to form negative ions."
EX2_H = "The nonmetals become negative ions."
EX3_T = "Nonmetallic elements also react with other nonmetals, in this case forming molecular compounds."
EX3_H = "Metals react with nonmetals in order to form ions."
EX4_T = "A chemical reaction is one in which the organization of the atoms is altered."
EX4_H = "The burning of methane is a chemical reaction is in the presence of oxygen."

RULES = [
    ("gain", "become"),
    ("form", "become"),
    ("form", "produce"),
    ("turn", "become"),
    ("freeze", "become"),
    ("combine", "react"),
    ("combine", "mix"),
    ("dissolve", "mix"),
    ("convert", "turn"),
    ("travel", "move"),
    ("release", "give"),
    ("consist", "contain"),
    ("located", "found"),
]

# (label, text, hypothesis)
PAIRS = [
    ("E", EX2_T, EX2_H),
    ("NE", EX3_T, EX3_H),
    ("NE", EX4_T, EX4_H),
    # threshold anchor: longest entailed summary the edit EDA still accepts
    ("E",
     "Pure metallic sodium reacts violently with cold water and this famously violent reaction releases colorless hydrogen gas and a large amount of thermal energy.",
     "Sodium reacts with cold water and releases hydrogen gas."),
]

E_PAIRS = [
    ("During the winter the pond water freezes into a thick layer of ice.",
     "The water in the pond becomes solid ice."),
    ("In strong acids the zinc metal dissolves and the solution turns cloudy.",
     "The zinc metal mixes into the solution."),
    ("The burning candle converts the solid wax into hot liquid.",
     "The candle turns the wax into a liquid."),
    ("Metals in the first group react violently with water.",
     "These metals react strongly with water."),
    ("Sound travels through air as a wave of pressure.",
     "Sound moves through the air."),
    ("The student combines the two clear liquids in a glass beaker.",
     "The student mixes the liquids together."),
    ("Heating the blue crystals removes the water and the crystals turn white.",
     "The heated crystals become white."),
    ("Every pure element consists of only one kind of atom.",
     "Each pure element contains one kind of atom."),
    ("When the fuel burns inside the engine the fuel releases energy as heat.",
     "The burning fuel gives out thermal energy."),
    ("Water is a chemical compound of hydrogen and oxygen and it contains H2O molecules.",
     "Water contains H2O molecules."),
    ("An atom consists of a nucleus and the nucleus contains protons and neutrons.",
     "The nucleus contains protons and neutrons."),
    ("Sodium chloride is an ionic compound and it dissolves in water.",
     "Sodium chloride dissolves in water."),
    ("Acids react with metals and produce hydrogen gas.",
     "Acids react with metals."),
    ("The salt dissolves in warm water and the solution becomes clear.",
     "The salt dissolves in warm water."),
    ("Carbon atoms form strong covalent bonds with hydrogen atoms.",
     "Carbon atoms form covalent bonds."),
    ("Electrons carry a negative charge and protons carry a positive charge.",
     "Electrons carry a negative charge."),
    ("A catalyst increases the rate of a chemical reaction.",
     "A catalyst increases the reaction rate."),
    ("Metals conduct electricity because their electrons move between atoms.",
     "Metals conduct electricity."),
    ("Chemical reactions rearrange the atoms of the reactants into new products.",
     "Chemical reactions rearrange atoms."),
    ("The periodic table organizes the chemical elements by atomic number.",
     "The periodic table organizes the elements."),
    ("An acid neutralizes a base and produces a salt.",
     "An acid neutralizes a base."),
    ("Copper conducts electricity and heat.",
     "Copper conducts electricity."),
    ("Hydrogen gas burns in oxygen and the combustion produces water vapor.",
     "Hydrogen gas burns in oxygen."),
    ("Nonmetals gain electrons in reactions with metals.",
     "Nonmetals become negative ions in reactions with metals."),
    ("Chlorine atoms gain one electron and form negative chloride ions.",
     "Chlorine atoms become chloride ions."),
    ("Iron combines with oxygen in moist air.",
     "Iron reacts with oxygen."),
    ("Sugar dissolves quickly in hot water.",
     "Sugar mixes with hot water."),
    ("Magnesium burns in air with a bright white flame and forms magnesium oxide.",
     "Magnesium produces magnesium oxide."),
    ("A chemist measures the mass of the sample and records the result in a notebook.",
     "The chemist measures the mass of the sample."),
    ("Students mix the two solutions and observe a white precipitate in the beaker.",
     "Students observe a white precipitate."),
    ("The experiment demonstrates that heat increases the solubility of most salts.",
     "Heat increases the solubility of most salts."),
    ("Scientists classify the elements into metals and nonmetals.",
     "Scientists classify the elements."),
    ("Atoms share electrons in covalent bonds and transfer electrons in ionic bonds.",
     "Atoms share electrons in covalent bonds."),
    ("Distillation separates a mixture of liquids.",
     "Distillation separates a mixture."),
    ("The indicator turns red in acidic solutions and blue in alkaline solutions.",
     "The indicator turns red in acidic solutions."),
    ("Pure water boils at a fixed temperature at constant pressure.",
     "Pure water boils at a fixed temperature."),
    ("Salt lowers the freezing temperature of water on winter roads.",
     "Salt lowers the freezing temperature of water."),
    ("The reaction releases energy and the mixture becomes warm.",
     "The reaction releases energy."),
    ("Atoms of the same element contain the same number of protons.",
     "Atoms of an element contain the same number of protons."),
    ("An electric current decomposes water into hydrogen and oxygen.",
     "Electrolysis decomposes water into hydrogen and oxygen."),
    ("Dense materials sink in water and light materials float on water.",
     "Dense materials sink in water."),
    ("The students heated the metal and the metal expanded.",
     "The students heated the metal."),
    # negation on both sides keeps the mismatch feature honest
    ("Noble gases do not react with other elements under normal conditions.",
     "Noble gases do not react with other elements."),
    ("The compound does not contain carbon atoms and chemists call it inorganic.",
     "The compound does not contain carbon."),
    ("Oil does not dissolve in water and the two liquids form separate layers.",
     "Oil does not dissolve in water."),
    ("Pure gold does not rust in moist air.",
     "Gold does not rust."),
    ("The solid never melts below its melting temperature.",
     "The solid never melts below its melting temperature."),
    ("Helium atoms do not form chemical bonds with other atoms.",
     "Helium does not form chemical bonds."),
]

NE_PAIRS = [
    # unrelated chemistry topics: low overlap
    ("Sulfuric acid corrodes many metals in the laboratory.",
     "Chlorophyll absorbs red light in plant leaves."),
    ("The periodic table lists more than one hundred chemical elements.",
     "Plastic polymers consist of long chains of monomers."),
    ("Electrolysis decomposes water into hydrogen and oxygen.",
     "Photosynthesis stores solar energy in glucose molecules."),
    ("Metals conduct heat because their electrons move between atoms.",
     "Enzymes speed up reactions in living cells."),
    ("The candle burns and the hot wax melts slowly.",
     "The battery converts chemical energy into electric energy."),
    ("Salt crystals form when the seawater evaporates in the sun.",
     "Radioactive isotopes decay at a constant rate."),
    ("A thermometer measures the temperature of the solution.",
     "A barometer measures the pressure of the surrounding atmosphere at sea level."),
    ("Copper wires carry the electric charge around the circuit.",
     "Glass insulators stop the flow of charge."),
    ("Acid rain damages stone buildings over many decades.",
     "Ozone protects the planet from ultraviolet radiation."),
    ("The student filters the sand out of the mixture.",
     "The teacher distills the alcohol from the wine."),
    ("Diamond is the hardest natural material.",
     "Graphite conducts electricity along its layers."),
    ("Ice floats on liquid water because ice is less dense.",
     "Steam condenses on a cold window in winter."),
    ("Neutrons carry no electric charge.",
     "Protons repel one another inside the nucleus."),
    ("Hot air rises above the warm ground in summer.",
     "Sound travels faster in water than in air."),
    ("The chemist weighs the white powder on the balance.",
     "The biologist examines the green cells under the microscope."),
    ("Alkali metals react violently with cold water.",
     "Noble gases glow brightly inside electric lamps."),
    ("The reaction produces carbon dioxide gas and the gas escapes from the flask.",
     "The crystal grows larger in the saturated solution overnight."),
    ("Vinegar contains a weak acid that softens hard water deposits.",
     "Bleach contains a strong base that destroys colored stains."),
    ("Petrol evaporates quickly on a warm day.",
     "Mercury remains liquid at room temperature."),
    ("The forest fire releases smoke and ash into the sky.",
     "The volcano throws lava and hot gas onto the mountain."),
    ("The laboratory stores dangerous acids in glass bottles.",
     "The museum displays ancient gold coins in wooden cases."),
    # related topic, hypothesis goes beyond the text: long hypotheses
    ("Metals form positive ions in reactions.",
     "The metals always lose all their outer electrons and all their inner electrons in every violent reaction."),
    ("Water contains hydrogen and oxygen.",
     "The water molecule contains two oxygen atoms for every single hydrogen atom in the compound."),
    ("The reaction between the acid and the base produces a salt.",
     "The violent reaction between the strong acid and the heavy metal produces a toxic brown gas and a dangerous solid residue."),
    ("An electron carries a negative charge.",
     "The electron is the heaviest and largest particle inside the nucleus of every atom."),
    ("Carbon forms many organic compounds.",
     "Every compound of carbon is an organic compound with a long chain of carbon atoms."),
    ("The solution contains dissolved salt.",
     "The solution contains a high concentration of pure silver nitrate from the local mine."),
    ("Atoms contain protons and electrons.",
     "The number of neutrons inside the nucleus always equals twice the number of protons."),
    ("The gas in the flask expands.",
     "The hot gas in the sealed flask expands until the glass container finally explodes."),
    ("Iron rusts in moist air.",
     "The iron nail rusts completely within one single hour in perfectly dry and completely clean desert air."),
    ("The mixture boils in the flask.",
     "The boiling mixture in the flask turns green and releases a sweet smelling vapor."),
    ("Chemists study the properties of matter.",
     "The chemists in this laboratory study the magnetic properties of frozen helium crystals."),
    ("The experiment requires a clean test-tube.",
     "The dangerous experiment requires a platinum crucible and a very expensive laser instrument."),
    ("Sodium is a soft silver metal.",
     "Sodium is a hard yellow nonmetal that chemists store under pure cold water."),
    ("The candle wax melts near the flame.",
     "The burning candle converts all of its wax into pure liquid oxygen near the flame."),
    ("Sugar contains carbon, hydrogen, and oxygen.",
     "Sugar contains equal numbers of carbon, silver, and potassium atoms in every molecule."),
    # negation mismatches
    ("Pure water conducts electricity poorly.",
     "Pure water does not conduct electricity at all."),
    ("Noble gases react with fluorine under extreme conditions.",
     "Noble gases never react with fluorine."),
    ("The acid dissolves the metal surface.",
     "The acid does not dissolve the metal surface."),
    ("Salt dissolves readily in water.",
     "Salt does not dissolve in water."),
    ("The compound contains nitrogen atoms.",
     "The compound contains no nitrogen atoms."),
    ("Heat changes the structure of the protein.",
     "Heat never changes the structure of any protein."),
    ("The flame emits a bright yellow light.",
     "The flame emits no light."),
    ("Magnesium burns brightly in oxygen.",
     "Magnesium does not burn in oxygen."),
    # contradictions by antonym swap
    ("Sodium chloride is highly soluble in water.",
     "Sodium chloride is insoluble in water."),
    ("The electron carries a negative charge.",
     "The electron carries a positive charge."),
    ("Helium is lighter than air.",
     "Helium is heavier than air and sinks."),
    ("The reaction releases heat into the surroundings.",
     "The reaction absorbs heat from the surroundings."),
]


def build_pairs():
    pairs = list(PAIRS)
    pairs += [("E", t, h) for t, h in E_PAIRS]
    pairs += [("NE", t, h) for t, h in NE_PAIRS]
    return [
        ent.TrainingPair(t, h, ent.ENTAILMENT if lab == "E" else ent.NON_ENTAILMENT)
        for lab, t, h in pairs
    ]


def main():
    pairs = build_pairs()
    n_e = sum(p.gold == ent.ENTAILMENT for p in pairs)
    n_ne = len(pairs) - n_e
    print(f"pairs: {len(pairs)}  E={n_e}  NE={n_ne}")

    resource = ent.LexicalResource.from_rows(RULES)
    lo, hi = 5.0 / 13.0, 0.4

    rows = []
    for p in pairs:
        d = min(d for _, d in ent.normalized_distances(p.text, p.hypothesis, resource))
        rows.append((d, p))
    bad = []
    for d, p in rows:
        neg = "not" in p.hypothesis or "never" in p.hypothesis or " no " in f" {p.hypothesis} "
        if p.gold == ent.ENTAILMENT and d > hi - 1e-9:
            bad.append(("E too far", d, p.hypothesis))
        if p.gold == ent.NON_ENTAILMENT and d < hi - 1e-9 and not neg:
            anton = any(w in p.hypothesis for w in
                        ("insoluble", "positive charge", "heavier", "absorbs heat"))
            if not anton:
                bad.append(("NE too close", d, p.hypothesis))
    for kind, d, h in bad:
        print(f"  {kind}: d={d:.4f}  H={h!r}")

    e_ds = sorted(d for d, p in rows if p.gold == ent.ENTAILMENT)
    print(f"E d_norm: max={e_ds[-1]:.5f} second={e_ds[-2]:.5f} min={e_ds[0]:.5f}")
    ne_ds = sorted(d for d, p in rows if p.gold == ent.NON_ENTAILMENT)
    print(f"NE d_norm: min={ne_ds[0]:.5f}")

    edit_model, edit_acc = ent.train_edit_distance(pairs, resource)
    print(f"edit: theta={edit_model.theta:.5f} accuracy={edit_acc:.2f}")
    ok_theta = lo - 1e-9 <= edit_model.theta < hi
    print(f"  theta in [5/13, 0.4): {ok_theta}")
    for name, t, h, want in [
        ("Ex2", EX2_T, EX2_H, ent.ENTAILMENT),
        ("Ex3", EX3_T, EX3_H, ent.NON_ENTAILMENT),
        ("Ex4", EX4_T, EX4_H, ent.NON_ENTAILMENT),
    ]:
        got = ent.decide_edit_distance(t, h, edit_model)
        print(f"  edit {name}: {got.label} (want {want}) conf={got.confidence:.3f}")

    maxent_model, maxent_acc = ent.train_classifier(pairs)
    print(f"maxent: accuracy={maxent_acc:.2f}")
    print(f"  weights={[round(w, 3) for w in maxent_model.weights]}")
    for name, t, h, want in [
        ("Ex2", EX2_T, EX2_H, ent.ENTAILMENT),
        ("Ex3", EX3_T, EX3_H, ent.NON_ENTAILMENT),
        ("Ex4", EX4_T, EX4_H, ent.NON_ENTAILMENT),
    ]:
        got = ent.decide_classifier(t, h, maxent_model)
        print(f"  maxent {name}: {got.label} (want {want}) conf={got.confidence:.3f}")

    if "--write" in sys.argv:
        data = Path(__file__).resolve().parents[1] / "src" / "ontoeg" / "data"
        (data / "entailment_pairs.tsv").write_text(
            ent.format_pairs(pairs), encoding="utf-8")
        (data / "lexical_rules.tsv").write_text(
            "".join(f"{a}\t{b}\n" for a, b in RULES), encoding="utf-8")
        print("written")


if __name__ == "__main__":
    main()

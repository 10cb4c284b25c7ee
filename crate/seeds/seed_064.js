let label = String(9) + "lion";
let slot = "red umbrella";
if (label.length > 8) {
  slot = label + slot;
}
print(label, slot.length);
let count = [65535, 3, 100, 31];
let mode = 0;
for (let i = 0; i < count.length; i++) {
  mode = mode + count[i];
}
print(mode);
let last = { kind: 65535, height: "lime", pool: [9, 20, 20] };
last.kind = last.kind + last.pool.length;
print(last.kind, last.height);
let table = true;
let queue = !table || 12 > 10 && 127 != 50;
if (queue) {
  print("omega dagger");
} else if (table) {
  print("topaz");
} else {
  print(null);
}
let data = start => start * 9;
let total = start => {
  return data(start) - 7;
};
print(data(4), total(20));

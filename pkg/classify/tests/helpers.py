def write_csv(path, ids, labels, rows, columns):
    lines = [",".join(["subject_id", "label"] + columns)]
    for sid, label, row in zip(ids, labels, rows):
        lines.append(",".join([sid, str(label)] + [repr(float(x)) for x in row]))
    path.write_text("\n".join(lines) + "\n")
